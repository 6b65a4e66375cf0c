"""Acceptance criteria.

Each test prints one ``[PASS]`` / ``[FAIL]`` line (visible even under output
capture) and then asserts.  Run on its own with

    pytest tests/test_acceptance.py -v
"""

import itertools
import random
import time

import pytest

import m0nflag.splits
import m0nflag.trees
from m0nflag.complexes import SimplicialComplex, f_vector, is_flag
from m0nflag.moduli import (
    boundary_divisors,
    compatibility_clique_counts,
    dual_complex,
    enumerate_strata,
    verify_flag_theorem,
)
from m0nflag.newick import parse_newick, to_newick
from m0nflag.splits import SplitSystem, compatible, enumerate_stable_splits, keel_intersects
from m0nflag.trees import (
    enumerate_trees,
    internal_degrees_ok,
    is_binary,
    pop_split,
    splits_of_tree,
    star_tree,
    tree_from_splits,
)

from conftest import binary_count, brute_stable_bipartitions, compatible_systems, greedy_system

N7_BUDGET_SECONDS = 60.0
RANDOM_SYSTEMS = 1000
SHUFFLES = 10


@pytest.fixture
def verdict(capsys):
    def record(label, ok, detail=""):
        with capsys.disabled():
            print(f"\n[{'PASS' if ok else 'FAIL'}] {label}" + (f" ({detail})" if detail else ""))
        assert ok, f"{label}: {detail}"

    return record


def test_ac1_flag_theorem_machine_checked(verdict, monkeypatch):
    def forbidden(*args):
        raise AssertionError("verification must not consult the compatibility test")

    # faces come from tree reconstruction only
    monkeypatch.setattr(m0nflag.splits, "compatible", forbidden)
    monkeypatch.setattr(m0nflag.trees, "first_incompatible_pair", forbidden)
    results = {}
    for n in (4, 5, 6, 7):
        start = time.perf_counter()
        results[n] = (verify_flag_theorem(n), time.perf_counter() - start)
    r7, t7 = results[7]
    ok = (
        all(r.is_flag and r.witness is None for r, _ in results.values())
        and r7.divisor_count == 56
        and r7.max_face_size == 4
        and t7 < N7_BUDGET_SECONDS
    )
    verdict(
        "AC1 flag theorem verified for n=4..7",
        ok,
        f"n=7: {r7.divisor_count} divisors, max clique {r7.max_face_size}, {t7:.2f}s",
    )


def test_ac2_keel_equals_compatibility(verdict):
    pairs = mismatches = 0
    for n in range(4, 11):
        splits = enumerate_stable_splits(n)
        for a, b in itertools.combinations_with_replacement(splits, 2):
            pairs += 1
            if keel_intersects(a, b) != compatible(a, b):
                mismatches += 1
    n10 = len(enumerate_stable_splits(10))
    verdict(
        "AC2 containment criterion == compatibility, n=4..10",
        mismatches == 0 and n10 == 501,
        f"{pairs} pairs, {mismatches} mismatches",
    )


def test_ac3_counting_cross_oracles(verdict):
    divisors = [len(boundary_divisors(n)) for n in range(4, 8)]
    closed = [2 ** (n - 1) - n - 1 for n in range(4, 8)]
    brute = [len(brute_stable_bipartitions(n)) for n in range(4, 8)]
    strata_ok = True
    for n, total in ((4, 4), (5, 26)):
        by_trees = len(enumerate_strata(n)[0])
        by_cliques = sum(compatibility_clique_counts(n))
        by_sets = len(compatible_systems(n))
        strata_ok &= by_trees == by_cliques == by_sets == total
    binaries = [sum(is_binary(t) for t in enumerate_trees(n)) for n in range(5, 9)]
    recursion = [binary_count(n) for n in range(5, 9)]
    ok = (
        divisors == closed == brute == [3, 10, 25, 56]
        and strata_ok
        and binaries == recursion == [15, 105, 945, 10395]
    )
    verdict("AC3 counting cross-oracles", ok, f"divisors {divisors}, binary trees {binaries}")


def test_ac4_petersen_structure_and_dimension(verdict):
    c = dual_complex(5)
    degree = {v: 0 for v in c.vertices}
    for a, b in c.one_skeleton():
        degree[a] += 1
        degree[b] += 1
    triangle_free = not any(len(f) >= 3 for f in c.faces())
    # independent Petersen check: two-element sides adjacent iff disjoint
    pair = {
        d: frozenset(i for i in range(1, 6) if (d.split.block if d.split.block.bit_count() == 2 else d.split.complement) >> (i - 1) & 1)
        for d in c.vertices
    }
    petersen = all((not pair[a] & pair[b]) == ((a, b) in set(c.one_skeleton()) or (b, a) in set(c.one_skeleton()))
                   for a, b in itertools.combinations(c.vertices, 2))
    dims = {n: dual_complex(n).dimension for n in range(4, 8)}
    ok = (
        f_vector(c) == [10, 15]
        and set(degree.values()) == {3}
        and triangle_free
        and petersen
        and all(d == n - 4 for n, d in dims.items())
    )
    verdict("AC4 Petersen structure at n=5, dim = n-4 for n=4..7", ok, f"f-vector {f_vector(c)}, dims {dims}")


@pytest.fixture(scope="module")
def corpus():
    """Exhaustive compatible systems for n <= 7 plus random greedy systems up to n = 20."""
    rng = random.Random(1015)
    systems = []
    for n in range(3, 8):
        systems.extend((n, s) for s in compatible_systems(n))
    exhaustive = len(systems)
    random_sizes = []
    for _ in range(RANDOM_SYSTEMS):
        n = rng.randint(4, 20)
        s = greedy_system(rng, n)
        systems.append((n, s))
        random_sizes.append(len(s))

    round_trip_failures = 0
    order_failures = 0
    degree_failures = 0
    pops = 0
    trees = []
    for n, system in systems:
        t = tree_from_splits(n, system)
        if splits_of_tree(t) != SplitSystem(n, system):
            round_trip_failures += 1
        reference = to_newick(t)
        for _ in range(SHUFFLES):
            order = system[:]
            rng.shuffle(order)
            u = star_tree(n)
            for s in order:
                u = pop_split(u, s)
                pops += 1
                if not internal_degrees_ok(u):
                    degree_failures += 1
            if to_newick(u) != reference:
                order_failures += 1
        trees.append(t)
    return {
        "exhaustive": exhaustive,
        "random": RANDOM_SYSTEMS,
        "max_random_size": max(random_sizes),
        "round_trip_failures": round_trip_failures,
        "order_failures": order_failures,
        "degree_failures": degree_failures,
        "pops": pops,
        "trees": trees,
    }


def test_ac5_reconstruction_round_trip(verdict, corpus):
    ok = corpus["round_trip_failures"] == 0 and corpus["order_failures"] == 0 and corpus["random"] >= 1000
    verdict(
        "AC5 reconstruction round trip and order independence",
        ok,
        f"{corpus['exhaustive']} exhaustive + {corpus['random']} random systems x {SHUFFLES} shuffles, "
        f"{corpus['round_trip_failures']} round-trip / {corpus['order_failures']} order failures",
    )


def test_ac6_no_degree_two_vertices(verdict, corpus):
    verdict(
        "AC6 internal degrees >= 3 after every pop_split",
        corpus["degree_failures"] == 0 and corpus["pops"] > 0,
        f"{corpus['pops']} pops, {corpus['degree_failures']} violations",
    )


def test_ac7_newick_round_trip(verdict, corpus):
    trees = [t for n in range(3, 7) for t in enumerate_trees(n)] + corpus["trees"]
    failures = sum(to_newick(parse_newick(to_newick(t))) != to_newick(t) for t in trees)
    verdict("AC7 Newick round trip", failures == 0, f"{len(trees)} trees, {failures} failures")


def test_ac8_negative_control(verdict):
    hollow = SimplicialComplex("abc", ["ab", "bc", "ca"])
    full = SimplicialComplex("abc", ["abc"])
    verdict("AC8 hollow triangle is not flag", not is_flag(hollow) and is_flag(full))
