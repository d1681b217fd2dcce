"""
Cross-checking harness: every identity the library promises, re-verified at a
requested size with independent computations where they exist, reported as
machine-readable pass/fail entries.

`run_suite(n, suite)` returns a dict report; `suite` is one of "all",
"bijection", "braid", "quiver" or "noncrossing".  Failures carry a
counterexample payload.  The harness can also be run with `inject_fault=True`,
which flips one Seifert sign on the library side of the first comparison and
must make the run fail; this is a self-test that the harness actually checks
something.
"""
from __future__ import annotations

import itertools
from typing import Callable

from . import bijection, braid, dbasis, noncrossing, parking, quiver, roots

Check = Callable[[int], None]


class CheckFailure(Exception):
    def __init__(self, counterexample):
        super().__init__(str(counterexample))
        self.counterexample = counterexample


def bilinear_seifert(a: roots.Root, b: roots.Root) -> int:
    """Independent Seifert values: expand bilinearly over simple-root pairs."""
    total = 0
    for i in a.support():
        for j in b.support():
            if i == j:
                total += 1
            elif j == i + 1:
                total -= 1
    return total


_FAULTY = False


def _seifert(a: roots.Root, b: roots.Root) -> int:
    value = roots.seifert(a, b)
    if _FAULTY and (a.lo, a.hi, b.lo, b.hi) == (1, 1, 2, 2):
        return -value
    return value


def check_seifert_bilinear(n: int) -> None:
    for a in roots.positive_roots(n):
        for b in roots.positive_roots(n):
            if _seifert(a, b) != bilinear_seifert(a, b):
                raise CheckFailure({"a": a.as_pair(), "b": b.as_pair()})


def check_seifert_cases_exclusive(n: int) -> None:
    for a in roots.positive_roots(n):
        for b in roots.positive_roots(n):
            case1 = b.lo <= a.lo <= b.hi <= a.hi
            case2 = a.lo <= b.lo - 1 <= a.hi < b.hi
            if case1 and case2:
                raise CheckFailure({"a": a.as_pair(), "b": b.as_pair()})


def check_cartan(n: int) -> None:
    for a in roots.positive_roots(n):
        if roots.cartan(a, a) != 2:
            raise CheckFailure({"a": a.as_pair()})
        for b in roots.positive_roots(n):
            if roots.cartan(a, b) != roots.cartan(b, a):
                raise CheckFailure({"a": a.as_pair(), "b": b.as_pair()})


def check_counts(n: int) -> None:
    pf = sum(1 for _ in parking.parking_functions(n))
    bases = sum(1 for _ in dbasis.distinguished_bases(n))
    if not pf == bases == dbasis.basis_count(n):
        raise CheckFailure({"parking": pf, "bases": bases, "expected": dbasis.basis_count(n)})


def check_round_trips(n: int) -> None:
    for f in parking.parking_functions(n):
        if bijection.initial_vector(bijection.reconstruct(f)) != f:
            raise CheckFailure({"f": list(f)})
    for basis in dbasis.distinguished_bases(n):
        if bijection.reconstruct(bijection.initial_vector(basis)) != basis:
            raise CheckFailure({"basis": [r.as_pair() for r in basis]})


def check_geometric(n: int) -> None:
    for f in parking.parking_functions(n):
        if bijection.reconstruct_geometric(f) != bijection.reconstruct(f):
            raise CheckFailure({"f": list(f)})


def check_permutation_shortcut(n: int) -> None:
    for sigma in itertools.permutations(range(1, n + 1)):
        if bijection.reconstruct_permutation(sigma) != bijection.reconstruct(sigma):
            raise CheckFailure({"sigma": list(sigma)})


def check_gap_single(n: int) -> None:
    for basis in dbasis.distinguished_bases(n):
        for i in range(1, n + 1):
            dbasis.gap(basis, i)  # raises unless a single point


def check_validate_accepts(n: int) -> None:
    for basis in dbasis.distinguished_bases(n):
        dbasis.validate_basis(basis, n)


def check_braid_axioms(n: int) -> None:
    for basis in dbasis.distinguished_bases(n):
        for k in range(1, n):
            left = braid.mutate(basis, k, "left")
            dbasis.validate_basis(left, n)
            if braid.mutate(left, k, "right") != basis:
                raise CheckFailure({"basis": [r.as_pair() for r in basis], "k": k})
            order = braid.generator_order(basis, k)
            current = basis
            for _ in range(order):
                current = braid.mutate(current, k, "left")
            if current != basis:
                raise CheckFailure({"basis": [r.as_pair() for r in basis], "k": k, "order": order})
        for k in range(1, n - 1):
            lhs = braid.apply_word(basis, (k, k + 1, k))
            rhs = braid.apply_word(basis, (k + 1, k, k + 1))
            if lhs != rhs:
                raise CheckFailure({"basis": [r.as_pair() for r in basis], "k": k})
        for k, m in itertools.combinations(range(1, n), 2):
            if m - k > 1:
                if braid.apply_word(basis, (k, m)) != braid.apply_word(basis, (m, k)):
                    raise CheckFailure({"basis": [r.as_pair() for r in basis], "k": k, "m": m})


def check_diagram_mutation(n: int) -> None:
    for f in parking.parking_functions(n):
        diagram = parking.to_diagram(f)
        for k in range(1, n):
            for direction in ("left", "right"):
                via_diagram = parking.from_diagram(braid.mutate_diagram(diagram, k, direction))
                if via_diagram != braid.mutate_parking(f, k, direction):
                    raise CheckFailure({"f": list(f), "k": k, "direction": direction})


def check_flips(n: int) -> None:
    for f in parking.nondecreasing_parking_functions(n):
        young = braid.young_of_diagram(parking.to_diagram(f))
        neighbours = {braid.flip_row(young, k) for k in range(1, n + 1)} | {young}
        for k in range(1, n):
            for direction in ("left", "right"):
                moved = braid.young_of_diagram(
                    parking.to_diagram(braid.mutate_parking(f, k, direction))
                )
                if moved not in neighbours:
                    raise CheckFailure({"f": list(f), "k": k, "direction": direction})


def check_hom_oracle(n: int) -> None:
    for a in roots.positive_roots(n):
        for b in roots.positive_roots(n):
            v, w = quiver.IntervalModule(a), quiver.IntervalModule(b)
            if quiver.hom_dim(v, w) != quiver.hom_dim_oracle(v, w):
                raise CheckFailure({"a": a.as_pair(), "b": b.as_pair()})
            if quiver.euler(v, w) != quiver.hom_dim(v, w) - quiver.ext_dim(v, w):
                raise CheckFailure({"a": a.as_pair(), "b": b.as_pair()})
            if _seifert(a, b) != quiver.euler(v, w):
                raise CheckFailure({"a": a.as_pair(), "b": b.as_pair()})


def check_ext_formula(n: int) -> None:
    for a in roots.positive_roots(n):
        for b in roots.positive_roots(n):
            if roots.seifert(b, a) == 0:
                v, w = quiver.IntervalModule(a), quiver.IntervalModule(b)
                expected = 1 if a.hi + 1 == b.lo else 0
                if quiver.ext_dim(v, w) != expected:
                    raise CheckFailure({"a": a.as_pair(), "b": b.as_pair()})


def check_exceptional_matches_validate(n: int) -> None:
    size = min(n, 4)  # exhaustive tuple space; larger ranks are covered via bases
    all_roots = list(roots.positive_roots(size))
    for tup in itertools.product(all_roots, repeat=size):
        if quiver.is_exceptional_sequence(quiver.modules_of(tup)) != dbasis.is_basis(tup, size):
            raise CheckFailure({"roots": [r.as_pair() for r in tup]})
    for basis in dbasis.distinguished_bases(n):
        if not quiver.is_exceptional_sequence(quiver.modules_of(basis)):
            raise CheckFailure({"basis": [r.as_pair() for r in basis]})


def check_hom_ext_table(n: int) -> None:
    for basis in dbasis.distinguished_bases(n):
        quiver.hom_ext_table(quiver.modules_of(basis))  # raises on any mismatch


def check_nondecreasing_families(n: int) -> None:
    nd_sets = set()
    nomono_sets = set()
    for basis in dbasis.distinguished_bases(n):
        arcs = frozenset(dbasis.to_arcs(basis).arcs)
        levels = bijection.initial_vector(basis)
        nomono = quiver.is_nondecreasing_collection(quiver.modules_of(basis))
        distinct_right = len({r for _, r in arcs}) == n
        if nomono != distinct_right:
            raise CheckFailure({"basis": [r.as_pair() for r in basis]})
        if all(levels[i] <= levels[i + 1] for i in range(n - 1)):
            if not nomono:
                raise CheckFailure({"basis": [r.as_pair() for r in basis]})
            nd_sets.add(arcs)
        if nomono:
            nomono_sets.add(arcs)
    if not (len(nd_sets) == parking.catalan(n) and nd_sets == nomono_sets):
        raise CheckFailure({"nd": len(nd_sets), "nomono": len(nomono_sets)})


def check_chain_counts(n: int) -> None:
    chains = list(noncrossing.maximal_chains(n))
    if len(chains) != dbasis.basis_count(n) or len(set(chains)) != len(chains):
        raise CheckFailure({"count": len(chains), "expected": dbasis.basis_count(n)})
    shifted = {tuple(v + 1 for v in noncrossing.stanley_labels(c)) for c in chains}
    if shifted != set(parking.parking_functions(n)):
        raise CheckFailure({"labels": len(shifted)})


def check_chain_identity(n: int) -> None:
    for basis in dbasis.distinguished_bases(n):
        chain = noncrossing.partition_chain(basis)
        labels = noncrossing.stanley_labels(chain)
        if tuple(v + 1 for v in labels) != bijection.initial_vector(basis):
            raise CheckFailure({"basis": [r.as_pair() for r in basis]})
        if noncrossing.chain_to_basis(chain) != basis:
            raise CheckFailure({"basis": [r.as_pair() for r in basis]})


SUITES: dict[str, list[tuple[str, Check]]] = {
    "bijection": [
        ("seifert_bilinear", check_seifert_bilinear),
        ("seifert_cases_exclusive", check_seifert_cases_exclusive),
        ("cartan_symmetric", check_cartan),
        ("counts", check_counts),
        ("round_trips", check_round_trips),
        ("geometric_equals_algebraic", check_geometric),
        ("permutation_shortcut", check_permutation_shortcut),
        ("gap_single_point", check_gap_single),
        ("validate_accepts_enumeration", check_validate_accepts),
    ],
    "braid": [
        ("braid_axioms", check_braid_axioms),
        ("diagram_mutation", check_diagram_mutation),
        ("young_flips", check_flips),
    ],
    "quiver": [
        ("hom_oracle", check_hom_oracle),
        ("ext_formula", check_ext_formula),
        ("exceptional_equals_validate", check_exceptional_matches_validate),
        ("hom_ext_table_reading", check_hom_ext_table),
        ("nondecreasing_families", check_nondecreasing_families),
    ],
    "noncrossing": [
        ("chain_counts", check_chain_counts),
        ("chain_identity", check_chain_identity),
    ],
}


def run_suite(n: int, suite: str = "all", inject_fault: bool = False) -> dict:
    """Run one suite (or all) at size n and return the report dict.

    The report has "ok" (bool) and a "checks" list of {name, ok, [error]}.
    """
    global _FAULTY
    if suite != "all" and suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}")
    names = list(SUITES) if suite == "all" else [suite]
    checks = [item for name in names for item in SUITES[name]]
    results = []
    _FAULTY = inject_fault
    try:
        for name, fn in checks:
            entry: dict = {"name": name}
            try:
                fn(n)
                entry["ok"] = True
            except CheckFailure as failure:
                entry["ok"] = False
                entry["counterexample"] = failure.counterexample
            except Exception as exc:  # noqa: BLE001 - report, never crash the harness
                entry["ok"] = False
                entry["error"] = f"{type(exc).__name__}: {exc}"
            results.append(entry)
    finally:
        _FAULTY = False
    return {
        "n": n,
        "suite": suite,
        "fault_injected": inject_fault,
        "checks": results,
        "ok": all(entry["ok"] for entry in results),
    }
