"""Brute-force references against the production implementations."""

import random

import pytest

from cyclat.affine import AffineWindow, interval_top, length, window_of_vector
from cyclat.oracle import (
    affine_length_by_enumeration,
    descents_by_scan,
    enumerate_admitted,
    generator_ball,
    join_by_search,
    meet_by_search,
    mobius_by_chain_count,
    order_by_closure,
)
from cyclat.perm import CircularPermutation
from cyclat.poset import Comparison, build, compare, eulerian
from cyclat.vectors import AdmittedVector, cycle_to_vector, join, meet


class TestClosureOrder:
    def test_tiny_order(self):
        closure = order_by_closure(build(3))
        comparable = sum(closure.leq(x, y)
                         for x in range(2) for y in range(2))
        assert comparable == 3  # two reflexive pairs plus bottom < top

    def test_matches_vector_comparison(self):
        diagram = build(5)
        closure = order_by_closure(diagram)
        for x in range(24):
            for y in range(24):
                expected = compare(diagram.nodes[x], diagram.nodes[y]) in \
                    (Comparison.LT, Comparison.EQ)
                assert closure.leq(x, y) == expected

    @pytest.mark.parametrize("n", [3, 4, 5, 6])
    def test_extremes_bound_everything(self, n):
        diagram = build(n)
        closure = order_by_closure(diagram)
        for t in range(len(diagram.nodes)):
            assert closure.leq(diagram.bottom, t)
            assert closure.leq(t, diagram.top)


class TestBoundSearch:
    def test_matches_recursive_bounds_exhaustively(self):
        diagram = build(5)
        closure = order_by_closure(diagram)
        rev = {v: t for t, v in enumerate(diagram.vecs)}
        for x in range(24):
            u = AdmittedVector(5, diagram.vecs[x])
            for y in range(24):
                v = AdmittedVector(5, diagram.vecs[y])
                assert join_by_search(closure, x, y) == rev[join(u, v).flat]
                assert meet_by_search(closure, x, y) == rev[meet(u, v).flat]

    def test_known_supremum(self):
        diagram = build(5)
        closure = order_by_closure(diagram)
        x = diagram.node_id(CircularPermutation.from_text("(1,4,2,3,5)"))
        y = diagram.node_id(CircularPermutation.from_text("(1,3,4,2,5)"))
        top = join_by_search(closure, x, y)
        assert diagram.nodes[top].as_text() == "(1,3,5,4,2)"

    def test_bottom_is_neutral(self):
        diagram = build(4)
        closure = order_by_closure(diagram)
        for t in range(len(diagram.nodes)):
            assert join_by_search(closure, t, diagram.bottom) == t
            assert meet_by_search(closure, t, diagram.top) == t


class TestMobiusByChains:
    def test_matches_recursion_exhaustively_small(self):
        from cyclat.poset import mobius
        diagram = build(4)
        closure = order_by_closure(diagram)
        for x in range(len(diagram.nodes)):
            for y in range(len(diagram.nodes)):
                if closure.leq(x, y):
                    assert mobius_by_chain_count(closure, x, y) == \
                        mobius(diagram, x, y)

    def test_matches_recursion_on_small_intervals(self):
        from cyclat.poset import interval, mobius
        diagram = build(5)
        closure = order_by_closure(diagram)
        checked = 0
        for x in range(len(diagram.nodes)):
            for y in range(len(diagram.nodes)):
                if closure.leq(x, y) and len(interval(diagram, x, y)) <= 10:
                    assert mobius_by_chain_count(closure, x, y) == \
                        mobius(diagram, x, y)
                    checked += 1
        assert checked > 100


class TestDescentScan:
    def test_tiny_histogram(self):
        assert descents_by_scan(3) == {0: 1, 1: 4, 2: 1}

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
    def test_totals_and_rows(self, n):
        from math import factorial
        hist = descents_by_scan(n)
        assert sum(hist.values()) == factorial(n)
        assert hist == {k: eulerian(n, k) for k in range(max(n, 1))
                        if eulerian(n, k)}


class TestAdmittedEnumeration:
    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_counts(self, n):
        from math import factorial
        assert len(enumerate_admitted(n)) == factorial(n - 1)

    def test_all_entries_validate(self):
        for flat in enumerate_admitted(5):
            AdmittedVector(5, flat)  # must not raise

    def test_matches_cycle_images(self):
        from cyclat.perm import all_cycles
        images = {cycle_to_vector(s).flat for s in all_cycles(5)}
        assert images == set(enumerate_admitted(5))


class TestAffineLength:
    def test_identity(self):
        assert affine_length_by_enumeration(tuple(range(1, 6))) == 0

    def test_top_window(self):
        assert affine_length_by_enumeration((-2, 1, 4, 7)) == 4

    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_matches_interval_lengths(self, n):
        for flat in enumerate_admitted(n):
            window = window_of_vector(AdmittedVector(n, flat))
            assert affine_length_by_enumeration(window.entries) == length(window)

    def test_matches_on_random_windows(self):
        rng = random.Random(17)
        for _ in range(60):
            n = rng.randint(2, 6)
            residues = list(range(1, n + 1))
            rng.shuffle(residues)
            offsets = [rng.randint(-2, 2) for _ in range(n - 1)]
            offsets.append(-sum(offsets))
            window = AffineWindow(
                tuple(r + n * k for r, k in zip(residues, offsets)))
            assert affine_length_by_enumeration(window.entries) == length(window)


class TestGeneratorBall:
    def test_lengths_match_bfs_distance(self):
        ball = generator_ball(4, 7)
        assert len(ball) > 100
        for entries, dist in ball.items():
            assert length(AffineWindow(entries)) == dist

    def test_top_of_small_interval_is_close(self):
        ball = generator_ball(3, 3)
        assert ball[interval_top(3).entries] == 1
