"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line."""

import itertools
import math
import time

import pytest

from gradedspecht.branching import (
    check_defect_shift_identity,
    check_degree_identity,
    check_restriction_identity,
    check_strictly_decreasing,
    induction_filtration,
)
from gradedspecht.combinatorics import (
    QuiverParams,
    addable_nodes,
    block_of,
    codegree,
    conjugate,
    defect,
    degree,
    dominates,
    enumerate_multicompositions,
    enumerate_multipartitions,
    enumerate_row_standard,
    enumerate_std,
    final_tableau,
    initial_tableau,
    node_residue,
    pair_dominates,
    strong_dominates,
    tableau_dominates,
)
from gradedspecht.hecke import (
    CellularBases,
    HeckeAlgebra,
    HeckeParams,
    seminormal_model,
    verify_cross_model,
    verify_klr,
    verify_model_relations,
)
from gradedspecht.symmetric import bruhat_leq, length, lemma22_witness, tableau_permutation


@pytest.fixture
def report(capsys):
    def emit(number, title, violations, checked, seconds, limit=None):
        ok = violations == 0 and (limit is None or seconds < limit)
        budget = f" (limit {limit}s)" if limit else ""
        line = f"criterion {number} [{title}]: {'PASS' if ok else 'FAIL'} checked={checked} violations={violations} time={seconds:.1f}s{budget}"
        with capsys.disabled():
            print("\n" + line)
        assert violations == 0
        if limit is not None:
            assert seconds < limit

    return emit


SWEEP_E = (0, 2, 3, 4)
SWEEP_CHARGES = ((0,), (0, 0), (3, 0), (7, 3, 0))


def test_criterion_1_combinatorics_sweep(report):
    start = time.perf_counter()
    checked = bad = 0
    for e, kappa in itertools.product(SWEEP_E, SWEEP_CHARGES):
        params = QuiverParams(e, kappa)
        for n in range(7):
            for mu in enumerate_multipartitions(n, params):
                t_mu = final_tableau(mu)
                checks = [
                    codegree(t_mu, params) + degree(t_mu, params) == defect(block_of(mu, params), params),
                    check_restriction_identity(mu, params),
                ]
                # with e = 0 only residues of addable nodes give nonempty layers
                residues = range(e) if e else sorted({node_residue(a, params) for a in addable_nodes(mu, None, params)})
                for i in residues:
                    filt = induction_filtration(mu, i, params)
                    checks.append(check_degree_identity(mu, i, params))
                    checks.append(check_defect_shift_identity(mu, i, params))
                    checks.append(check_strictly_decreasing([layer.shape for layer in filt.layers]))
                checked += len(checks)
                bad += checks.count(False)
    report(1, "combinatorics sweep", bad, checked, time.perf_counter() - start, limit=60)


def test_criterion_2_counting(report):
    start = time.perf_counter()
    checked = bad = 0
    for n in range(6):
        for level in (1, 2, 3):
            total = sum(len(enumerate_std(mu)) ** 2 for mu in enumerate_multipartitions(n, level))
            checked += 1
            bad += total != level**n * math.factorial(n)
    report(2, "counting", bad, checked, time.perf_counter() - start)


ENGINE_CASES = [(1, 1), (2, 1), (3, 1), (1, 2), (2, 2), (3, 2)]


def test_criterion_3_semisimple_engine(report):
    start = time.perf_counter()
    checked = bad = 0
    for n, level in ENGINE_CASES:
        params = HeckeParams.semisimple(n, level)
        assert params.xi == 2 and all(a - b >= n for a, b in zip(params.kappa, params.kappa[1:]))
        bases = CellularBases(HeckeAlgebra(params))
        for rep in (
            bases.verify_eigenvectors(),
            bases.verify_strong_dominance(),
            bases.verify_product_vanishing(),
            bases.verify_Lk_action(),
        ):
            checked += rep.checked
            bad += len(rep.violations)
    report(3, "semisimple engine", bad, checked, time.perf_counter() - start, limit=600)


def test_criterion_4_cross_model(report):
    start = time.perf_counter()
    checked = bad = 0
    cases = [HeckeParams.semisimple(n, level) for n in (1, 2, 3) for level in (1, 2)]
    cases += [HeckeParams.semisimple(n, 1, xi=3) for n in (2, 3)]
    cases += [HeckeParams(n, (n + 1, 0), 1) for n in (1, 2, 3)]
    for params in cases:
        for rep in (verify_model_relations(seminormal_model(params)), verify_cross_model(params)):
            checked += rep.checked
            bad += len(rep.violations)
    report(4, "cross-model oracle", bad, checked, time.perf_counter() - start)


def test_criterion_5_klr(report):
    start = time.perf_counter()
    checked = bad = 0
    for p in (2, 3):
        for level in (1, 2):
            for kappa in itertools.product(range(p), repeat=level):
                for n in (1, 2, 3):
                    rep = verify_klr(HeckeParams.degenerate(n, kappa, p))
                    checked += rep.checked
                    bad += len(rep.violations)
    report(5, "degenerate KLR", bad, checked, time.perf_counter() - start, limit=120)


def _same(t, a, b, key):
    x, y = t.node_of(a), t.node_of(b)
    return key(x) == key(y)


def test_criterion_6_dominance_infrastructure(report):
    start = time.perf_counter()
    checked = bad = 0
    counterexamples = 0
    for n in range(1, 5):
        for level in (1, 2, 3):
            shapes = enumerate_multipartitions(n, level)
            for a, b in itertools.product(shapes, repeat=2):
                checked += 1
                bad += dominates(a, b) != dominates(conjugate(b), conjugate(a))
            tabs = [t for mu in shapes for t in enumerate_std(mu)]
            for s, t in itertools.product(tabs, repeat=2):
                checked += 1
                bad += tableau_dominates(s, t) != tableau_dominates(t.conjugate(), s.conjugate())
            if level == 3 and n > 3:
                continue
            pairs = [(s, t) for mu in shapes for s in enumerate_std(mu) for t in enumerate_std(mu)]
            for p1, p2 in itertools.product(pairs, repeat=2):
                if strong_dominates(p1, p2):
                    checked += 1
                    bad += not pair_dominates(p1, p2)
                elif pair_dominates(p1, p2):
                    counterexamples += 1
        for level in (1, 2):
            for lam in enumerate_multicompositions(n, level):
                tabs = enumerate_row_standard(lam)
                for v, w in itertools.product(tabs, repeat=2):
                    checked += 1
                    bad += tableau_dominates(v, w) != bruhat_leq(tableau_permutation(v), tableau_permutation(w))
            for mu in enumerate_multipartitions(n, level):
                top = initial_tableau(mu)
                for s in enumerate_std(mu):
                    for a, b in itertools.combinations(range(1, n + 1), 2):
                        if not (_same(top, a, b, lambda x: (x.comp, x.row)) and _same(s, a, b, lambda x: (x.comp, x.col))):
                            continue
                        w, c = lemma22_witness(mu, s, a, b)
                        sw = s.act(w.images)
                        ok = (
                            w.support() <= set(range(a, b + 1))
                            and not sw.relaxed
                            and length(tableau_permutation(s) * w) == length(tableau_permutation(s)) + length(w)
                            and _same(top, c, c + 1, lambda x: (x.comp, x.row))
                            and _same(sw, c, c + 1, lambda x: (x.comp, x.col))
                        )
                        checked += 1
                        bad += not ok
    # the converse of the pair implication must fail somewhere
    checked += 1
    bad += counterexamples == 0
    report(6, "dominance infrastructure", bad, checked, time.perf_counter() - start)
