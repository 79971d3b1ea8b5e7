"""Command-line interface.

Subcommands: convert, poset, lattice, check, rank, covers, fc, alpha.
Elements are accepted in any of the three incarnations and detected by
the leading characters: "(" a cycle, "[[" triangular vector rows, "["
a window, "{" the JSON object forms {"n":..,"v":..} / {"n":..,"window":..}.
Exit codes: 0 success, 1 a check failed, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys

from cyclat import affine, checks, poset, vectors
from cyclat.errors import CyclatError
from cyclat.perm import CircularPermutation
from cyclat.vectors import AdmittedVector

FORMS = ("cycle", "vector", "window")


def detect_form(text: str) -> str:
    body = text.strip()
    if body.startswith("("):
        return "cycle"
    if body.startswith("[["):
        return "vector"
    if body.startswith("{"):
        try:
            payload = json.loads(body)
        except json.JSONDecodeError as exc:
            raise CyclatError(f"bad JSON element: {exc}") from None
        if "v" in payload:
            return "vector"
        if "window" in payload:
            return "window"
        raise CyclatError('JSON element needs a "v" or "window" key')
    if body.startswith("["):
        return "window"
    raise CyclatError(f"cannot detect the form of {text!r}; use --as")


def parse_element(text: str, form: str | None = None) -> tuple[str, AdmittedVector]:
    """Parse an element in any incarnation; returns (form, vector)."""
    body = text.strip()
    form = form or detect_form(body)
    if form == "cycle":
        return form, vectors.cycle_to_vector(CircularPermutation.from_text(body))
    if form == "vector":
        if body.startswith("{"):
            payload = json.loads(body)
            rows = payload["v"]
        else:
            try:
                rows = json.loads(body)
            except json.JSONDecodeError as exc:
                raise CyclatError(f"bad vector rows {text!r}: {exc}") from None
        if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
            raise CyclatError(f"vector form must be a list of rows: {text!r}")
        return form, AdmittedVector.from_rows(rows)
    if form == "window":
        if body.startswith("{"):
            payload = json.loads(body)
            window = affine.AffineWindow(tuple(int(x) for x in payload["window"]))
        else:
            window = affine.AffineWindow.from_text(body)
        return form, affine.vector_of_window(window)
    raise CyclatError(f"unknown form {form!r}")


def render_element(v: AdmittedVector, form: str) -> str:
    if form == "cycle":
        return vectors.vector_to_cycle(v).as_text()
    if form == "vector":
        return json.dumps(v.rows(), separators=(",", ":"))
    if form == "window":
        return affine.window_of_vector(v).as_text()
    raise CyclatError(f"unknown form {form!r}")


def _cmd_convert(args) -> int:
    form, v = parse_element(args.element, args.input_form)
    rendered = render_element(v, args.to)
    if args.json:
        print(json.dumps({"n": v.n, "from": form, "to": args.to,
                          "value": rendered}))
    else:
        print(rendered)
    return 0


def _cmd_poset(args) -> int:
    diagram = poset.build(args.n, workers=args.workers)
    text = poset.to_dot(diagram) if args.format == "dot" else poset.to_json(diagram)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_lattice(args) -> int:
    form, u = parse_element(args.x, args.input_form)
    _, v = parse_element(args.y, args.input_form)
    result = vectors.join(u, v) if args.op == "join" else vectors.meet(u, v)
    if args.json:
        print(json.dumps({"op": args.op, "result": render_element(result, form)}))
    else:
        print(render_element(result, form))
    return 0


def _cmd_check(args) -> int:
    reports = (checks.run_all(args.n) if args.name == "all"
               else [checks.run_check(args.name, args.n)])
    if args.json:
        print(json.dumps([r.to_payload() for r in reports], indent=2))
    else:
        for r in reports:
            print(r.human())
    return 0 if all(r.passed for r in reports) else 1


def _cmd_rank(args) -> int:
    _, v = parse_element(args.element, args.input_form)
    if args.json:
        print(json.dumps({"rank": v.rank}))
    else:
        print(v.rank)
    return 0


def _cmd_covers(args) -> int:
    from cyclat.perm import covers_down, covers_up

    _, v = parse_element(args.element, args.input_form)
    sigma = vectors.vector_to_cycle(v)
    payload = {}
    if args.direction in ("up", "both"):
        payload["up"] = [[label.as_pair(), tau.as_text()]
                         for label, tau in covers_up(sigma)]
    if args.direction in ("down", "both"):
        payload["down"] = [[label.as_pair(), tau.as_text()]
                           for label, tau in covers_down(sigma)]
    if args.json:
        print(json.dumps(payload))
    else:
        for direction, items in payload.items():
            print(f"{direction}:")
            for (r, s), text in items:
                print(f"  ({r},{s}) {text}")
    return 0


def _cmd_fc(args) -> int:
    window = affine.interval_top(args.n)
    if args.json:
        print(json.dumps({"n": args.n, "window": list(window.entries)}))
    else:
        print(window.as_text())
    return 0


def _cmd_alpha(args) -> int:
    _, u = parse_element(args.sigma, args.input_form)
    _, v = parse_element(args.tau, args.input_form)
    sigma = vectors.vector_to_cycle(u)
    tau = vectors.vector_to_cycle(v)
    if not u <= v:
        raise CyclatError(f"{sigma} is not below {tau}; no upward path exists")
    chain = _greedy_chain(u, v)
    result = poset.path_conjugator(sigma, chain)
    word = ",".join(str(a) for a in result.alpha)
    if args.json:
        print(json.dumps({"alpha": list(result.alpha),
                          "labels": [label.as_pair() for label in chain]}))
    else:
        print(word)
    return 0


def _greedy_chain(u: AdmittedVector, v: AdmittedVector):
    """First-label saturated chain from u up to v (requires u <= v)."""
    from cyclat.perm import covers_up

    chain = []
    current = u
    while current != v:
        sigma = vectors.vector_to_cycle(current)
        for label, tau in covers_up(sigma):
            candidate = vectors.cycle_to_vector(tau)
            if candidate <= v:
                chain.append(label)
                current = candidate
                break
        else:  # unreachable: the order is a lattice
            raise CyclatError("no cover stays below the target")
    return chain


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cyclat",
        description="The graded lattice of circular permutations: conversions, "
                    "lattice operations, diagram export, and verification checks.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_input_form(p):
        p.add_argument("--as", dest="input_form", choices=FORMS, default=None,
                       help="force the input incarnation instead of detecting it")

    p = sub.add_parser("convert", help="convert an element between incarnations")
    p.add_argument("element")
    p.add_argument("--to", required=True, choices=FORMS)
    p.add_argument("--json", action="store_true")
    add_input_form(p)
    p.set_defaults(func=_cmd_convert)

    p = sub.add_parser("poset", help="export the full diagram for an order")
    p.add_argument("n", type=int)
    p.add_argument("--format", choices=("dot", "json"), default="dot")
    p.add_argument("--out", default=None)
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=_cmd_poset)

    p = sub.add_parser("lattice", help="join or meet of two elements")
    p.add_argument("op", choices=("join", "meet"))
    p.add_argument("x")
    p.add_argument("y")
    p.add_argument("--json", action="store_true")
    add_input_form(p)
    p.set_defaults(func=_cmd_lattice)

    p = sub.add_parser("check", help="run structural verification checks")
    p.add_argument("name", help="check name or 'all'; see cyclat.checks.CHECKS")
    p.add_argument("n", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("rank", help="rank of an element")
    p.add_argument("element")
    p.add_argument("--json", action="store_true")
    add_input_form(p)
    p.set_defaults(func=_cmd_rank)

    p = sub.add_parser("covers", help="covers above/below an element")
    p.add_argument("element")
    p.add_argument("--direction", choices=("up", "down", "both"), default="both")
    p.add_argument("--json", action="store_true")
    add_input_form(p)
    p.set_defaults(func=_cmd_covers)

    p = sub.add_parser("fc", help="top window of the affine interval")
    p.add_argument("n", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_fc)

    p = sub.add_parser("alpha", help="conjugating permutation of an upward path")
    p.add_argument("sigma")
    p.add_argument("tau")
    p.add_argument("--json", action="store_true")
    add_input_form(p)
    p.set_defaults(func=_cmd_alpha)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CyclatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except json.JSONDecodeError as exc:
        print(f"error: bad JSON input: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
