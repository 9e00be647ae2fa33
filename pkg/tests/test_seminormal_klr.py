import os
import subprocess
import sys

import numpy as np
import pytest

from gradedspecht.combinatorics import BlockLabel, Multipartition, enumerate_multipartitions, enumerate_std
from gradedspecht.hecke import (
    HeckeAlgebra,
    HeckeParams,
    KLRData,
    SemisimplicityError,
    block_idempotents,
    klr_idempotents,
    klr_y,
    seminormal_model,
    verify_cross_model,
    verify_klr,
    verify_model_relations,
)
from gradedspecht.hecke.klr import projection_exponent


# seminormal model


MODEL_PARAMS = [HeckeParams(n, k, xi) for n in (1, 2, 3) for k in ((0,), (2 * n + 1, 0)) for xi in (2, 3, -2)] + [
    HeckeParams(n, k, 1) for n in (1, 2, 3) for k in ((0,), (n + 1, 0))
]


@pytest.mark.parametrize("params", MODEL_PARAMS, ids=lambda p: f"n{p.n}k{p.kappa}xi{p.xi}")
def test_model_relations(params):
    assert verify_model_relations(seminormal_model(params)).ok


@pytest.mark.parametrize("params", [HeckeParams.semisimple(3, 2), HeckeParams.semisimple(3, 1, 3), HeckeParams(2, (3, 0), 1)])
def test_cross_model_traces(params):
    rep = verify_cross_model(params)
    assert rep.ok and rep.checked >= params.level**params.n


def test_model_rejects_non_semisimple():
    with pytest.raises(SemisimplicityError):
        seminormal_model(HeckeParams(2, (1, 0), 2))
    with pytest.raises(SemisimplicityError):
        seminormal_model(HeckeParams.degenerate(2, (0,), 3))


def test_model_trace_of_identity_is_dimension():
    params = HeckeParams.semisimple(3, 2)
    model = seminormal_model(params)
    assert model.regular_trace((0, 0, 0), (1, 2, 3)) == 48


# KLR


def test_projection_exponent():
    assert projection_exponent(2, 6) == 8
    assert projection_exponent(3, 48) == 81 * 2
    for p in (2, 3, 5):
        for dim in (1, 6, 48):
            n = projection_exponent(p, dim)
            assert n >= dim and n % (p - 1) == 0


def test_klr_single_node():
    params = HeckeParams.degenerate(1, (0,), 2)
    alg = HeckeAlgebra(params)
    e = klr_idempotents(params, alg)
    assert e[(0,)] == alg.one() and e[(1,)].is_zero()
    assert klr_y(1, params, alg).is_zero()


def test_klr_n2_level1():
    params = HeckeParams.degenerate(2, (0,), 2)
    alg = HeckeAlgebra(params)
    e = klr_idempotents(params, alg)
    nonzero = {i for i, x in e.items() if not x.is_zero()}
    assert nonzero == {(0, 1)}
    total = alg.zero()
    for x in e.values():
        assert x * x == x
        total = total + x
    assert total == alg.one()
    blocks = block_idempotents(params, alg)
    assert blocks == {BlockLabel(((0, 1), (1, 1))): alg.one()}
    data = KLRData(alg)
    for r, y in data.y_matrices.items():
        yr = klr_y(r, params, alg)
        assert (yr ** alg.dim).is_zero()
        for x in e.values():
            assert yr * x == x * yr


def test_klr_one_block_per_residue_at_n1():
    params = HeckeParams.degenerate(1, (0, 1), 3)
    blocks = block_idempotents(params)
    assert set(blocks) == {BlockLabel(((0, 1),)), BlockLabel(((1, 1),))}


@pytest.mark.parametrize("p", [2, 3])
@pytest.mark.parametrize("n,kappa", [(2, (0,)), (3, (0,)), (2, (0, 1)), (3, (1, 0)), (3, (0, 0))])
def test_verify_klr(p, n, kappa):
    params = HeckeParams.degenerate(n, kappa, p)
    rep = verify_klr(params)
    assert rep.ok, rep.violations[:3]


def test_klr_rejects_rational_parameters():
    with pytest.raises(ValueError):
        KLRData(HeckeAlgebra(HeckeParams.semisimple(2, 1)))


def test_numpy_fallback_matches():
    # the env flag is read at import, so run a fresh interpreter
    code = (
        "import json;from gradedspecht.hecke import *;from gradedspecht.hecke import kernels;"
        "r=verify_klr(HeckeParams.degenerate(3,(0,1),2));"
        "d=KLRData(HeckeAlgebra(HeckeParams.degenerate(3,(0,1),2)));"
        "print(json.dumps([kernels.backend_name(),r.checked,len(r.violations),"
        "{str(k):v.tolist() for k,v in d.idempotent_matrices.items()}]))"
    )
    outs = {}
    for flag in ("0", "1"):
        env = dict(os.environ, GRADEDSPECHT_PURE_NUMPY=flag)
        res = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
        outs[flag] = res.stdout
    assert '"numba"' in outs["0"] and '"numpy"' in outs["1"]
    assert outs["0"].replace('"numba"', "") == outs["1"].replace('"numpy"', "")
