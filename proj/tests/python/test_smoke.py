import json
import os
import pathlib
from fractions import Fraction

import pytest

import mpinv

FIXTURES = pathlib.Path(os.environ.get("MPINV_FIXTURE_DIR", pathlib.Path(__file__).parents[2] / "fixtures"))

COUNTEREXAMPLE = [[1, 1, -2, 1], [0, 0, 0, 1], [0, 0, 0, 1], [0, 0, 0, 0]]


def test_counterexample_inverse():
    x = mpinv.mp_inverse(COUNTEREXAMPLE)
    assert x[0] == ["1/6", "-1/12", "-1/12", "0"]
    assert x[3] == ["0", "1/2", "1/2", "0"]
    assert mpinv.verify_penrose(COUNTEREXAMPLE, x)["moore_penrose"]
    assert mpinv.mp_inverse(x) == [[str(v) for v in row] for row in COUNTEREXAMPLE]


def test_blockwise_inverse_is_only_reflexive():
    parts = [[{1: 1}, {2: 1}], [{1: 1, 2: 1, 3: 1}, {4: 1}]]
    x = mpinv.blockwise_rgi(COUNTEREXAMPLE, parts)
    report = mpinv.verify_penrose(COUNTEREXAMPLE, x)
    assert report["reflexive"] and not report["moore_penrose"]
    assert mpinv.char_conditions(COUNTEREXAMPLE, parts) == (False, False)


def test_fractions_and_complex_strings():
    assert mpinv.mp_inverse([[Fraction(1, 2)]]) == [["2"]]
    assert mpinv.mp_inverse([["i"]]) == [["-i"]]
    assert mpinv.parse_scalar(" 1/2 + 1/3*i ") == "1/2+1/3*i"
    gram = [[2, 0], [0, 1]]
    x = mpinv.mp_inverse_geometric([[1, 1]], gram_domain=gram)
    assert mpinv.verify_penrose([[1, 1]], x, gram_domain=gram)["moore_penrose"]


def test_block_operator():
    op = mpinv.BlockOperator.from_json((FIXTURES / "phi_operator.json").read_text())
    assert op.is_finite_potent()
    inv = op.pinv()
    assert not inv.is_finite_potent()
    assert inv.pinv() == op
    assert op.apply({1: 1}) == {2: "1", 5: "1", 7: "1"}
    assert inv.apply({2: 1}) == {1: "-2", 2: "1", 4: "-1", 5: "1"}
    assert len(op.truncate(2)) == 20
    assert json.loads(op.to_json())["kind"] == "block_operator"

    report = op.solve({4: 1})
    assert report["consistent"] and report["min_solution"] == {3: "1"}
    assert report["kernel_head"] == [{7: "1"}]
    assert report["kernel_tail_pattern"] == [{12: "1"}]
    bad = op.solve({8: 1})
    assert not bad["consistent"] and bad["residual_norm_sq"] == "1"


def test_errors():
    with pytest.raises(ValueError):
        mpinv.parse_scalar("1/0")
    with pytest.raises(ArithmeticError):
        mpinv.BlockOperator([[[1, 2]]], [[0]])
