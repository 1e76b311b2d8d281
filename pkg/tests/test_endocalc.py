# -*- coding: utf-8 -*-
"""
Created on Friday, 16th October 2026 1:22:48 pm
===============================================================================
@filename:  test_endocalc.py
@author:    cuntz-rep developers
@project:   cuntz-rep
@purpose:   Unit tests for the endocalc.py module.
===============================================================================
"""
# pylint: disable=missing-function-docstring,redefined-outer-name
# pylint: disable=protected-access

import json
from itertools import product
from pathlib import Path
from typing import Generator

import pytest

from cuntz_rep import endocalc
from cuntz_rep.endocalc import ENDOS, PSI12, PSI13, PermEndo
from cuntz_rep.repcalc import Decomposition, mk_chain, mk_cycle
from cuntz_rep.words import LassoWord, Word


def small_endos() -> dict[str, PermEndo]:
    return {**ENDOS, "swap": endocalc.perm_endo(2, (2, 1))}


@pytest.fixture
def swap_pad() -> Generator[list, None, None]:
    # (a, b) -> (3 - a, b), the letter swap padded to depth two
    yield [((a, b), (3 - a, b)) for a in (1, 2) for b in (1, 2)]


class TestPermEndo:
    """
    Tests the PermEndo class.
    """

    @staticmethod
    def test_builtins():
        assert PSI12.depth == 2
        assert PSI12.table == ((1, 2), (1, 1), (2, 1), (2, 2))
        assert PSI13.table == ((2, 1), (1, 2), (1, 1), (2, 2))
        assert set(ENDOS) == {"psi12", "psi13", "rho", "rhobar", "id2"}

    @staticmethod
    def test_depth_reduction(swap_pad: list):
        endo = endocalc.mk_endo(2, 2, swap_pad)
        assert endo.depth == 1
        assert endo.table == ((2,), (1,))
        assert endo == endocalc.perm_endo(2, (2, 1))

    @staticmethod
    def test_call_pads():
        assert PSI12((1, 1, 2)) == (1, 2, 2)
        assert endocalc.perm_endo(3, (2, 3, 1))((1, 2)) == (2, 2)

    @staticmethod
    def test_call_short():
        with pytest.raises(ValueError):
            PSI12((1,))

    @staticmethod
    def test_identity():
        assert endocalc.identity_endo(3).is_identity
        assert ENDOS["id2"].is_identity
        assert not PSI12.is_identity

    @staticmethod
    def test_pairs():
        assert PSI13.pairs[0] == ((1, 1), (2, 1))
        assert len(PSI13.pairs) == 4

    @staticmethod
    @pytest.mark.parametrize(
        "pairs",
        (
            [((1,), (1,))],
            [((1,), (1,)), ((1,), (2,))],
            [((1,), (1,)), ((2,), (1, 2))],
        ),
    )
    def test_mk_endo_errors(pairs: list):
        with pytest.raises(ValueError):
            endocalc.mk_endo(2, 1, pairs)

    @staticmethod
    def test_not_bijective():
        with pytest.raises(ValueError):
            endocalc.mk_endo(2, 1, [((1,), (1,)), ((2,), (1,))])

    @staticmethod
    @pytest.mark.parametrize(
        "depth,table,error",
        (
            (0, ((1,), (2,)), ValueError),
            (1.0, ((1,), (2,)), TypeError),
            (1, ((1,),), ValueError),
            (1, ((1, 2), (2, 1)), ValueError),
        ),
    )
    def test_bad_tables(depth, table: tuple, error: type):
        with pytest.raises(error):
            PermEndo(2, depth, table)

    @staticmethod
    def test_dict_roundtrip():
        data = ENDOS["rho"].to_dict()
        assert data["alphabet"] == 4
        assert data["map"][0] == [[1, 1], [2, 3]]
        assert PermEndo.from_dict(data) == ENDOS["rho"]

    @staticmethod
    def test_load(tmp_path: Path):
        path = tmp_path.joinpath("psi13.json")
        path.write_text(json.dumps(PSI13.to_dict()), encoding="utf-8")
        assert PermEndo.load(path) == PSI13

    @staticmethod
    def test_load_missing(tmp_path: Path):
        with pytest.raises(OSError):
            PermEndo.load(tmp_path.joinpath("missing.json"))

    @staticmethod
    def test_load_bad_json(tmp_path: Path):
        path = tmp_path.joinpath("bad.json")
        path.write_text("{", encoding="utf-8")
        with pytest.raises(json.JSONDecodeError):
            PermEndo.load(path)


class TestMonomials:
    """
    Tests the monomial expansion of psi(s_i).
    """

    @staticmethod
    def test_depth_one():
        terms = endocalc.endo_monomials(endocalc.identity_endo(2), 1)
        assert terms == ((Word(2, (1,)), Word(2)),)

    @staticmethod
    def test_psi12():
        first = endocalc.endo_monomials(PSI12, 1)
        assert [(j.letters, k.letters) for j, k in first] == [
            ((1, 1), (2,)),
            ((1, 2), (1,)),
        ]
        second = endocalc.endo_monomials(PSI12, 2)
        assert [(j.letters, k.letters) for j, k in second] == [((2,), ())]

    @staticmethod
    def test_bad_letter():
        with pytest.raises(ValueError):
            endocalc.endo_monomials(PSI12, 3)

    @staticmethod
    def test_render():
        assert endocalc.render_monomials(PSI12) == [
            "s_1 -> s_{11,2} + s_{12,1}",
            "s_2 -> s_{2,0}",
        ]

    @staticmethod
    def test_render_wide_alphabet():
        lines = endocalc.render_monomials(endocalc.identity_endo(10))
        assert lines[9] == "s_10 -> s_{10,0}"


class TestProducts:
    """
    Tests the tensor product of endomorphisms.
    """

    @staticmethod
    def test_identity_tensor():
        ident = endocalc.identity_endo(2)
        result = endocalc.endo_tensor(ident, ident)
        assert result.alphabet == 4
        assert result.depth == 1
        assert result.is_identity

    @staticmethod
    def test_mixed_depths():
        result = endocalc.endo_tensor(PSI12, endocalc.identity_endo(3))
        assert result.alphabet == 6
        assert result.depth == 2

    @staticmethod
    def test_u_action():
        perm = endocalc.u_action((2, 1), (1, 2))
        assert perm == (3, 4, 1, 2)
        result = endocalc.endo_tensor(
            endocalc.perm_endo(2, (2, 1)), endocalc.perm_endo(2, (1, 2))
        )
        assert result.table == tuple((x,) for x in perm)

    @staticmethod
    def test_power():
        assert endocalc.endo_power(PSI12, 1) == PSI12
        assert endocalc.endo_power(PSI12, 2) == endocalc.endo_tensor(
            PSI12, PSI12
        )
        with pytest.raises(ValueError):
            endocalc.endo_power(PSI12, 0)

    @staticmethod
    @pytest.mark.parametrize(
        "names", tuple(product(("psi12", "psi13", "id2", "swap"), repeat=3))
    )
    def test_associative(names: tuple):
        first, second, third = (small_endos()[name] for name in names)
        left = endocalc.endo_tensor(
            endocalc.endo_tensor(first, second), third
        )
        right = endocalc.endo_tensor(
            first, endocalc.endo_tensor(second, third)
        )
        assert left == right
        assert left.alphabet == 8

    @staticmethod
    @pytest.mark.parametrize(
        "names", tuple(product(("psi12", "psi13", "id2", "swap"), repeat=2))
    )
    def test_depth_is_max(names: tuple):
        first, second = (small_endos()[name] for name in names)
        result = endocalc.endo_tensor(first, second)
        assert result.depth == max(first.depth, second.depth)


class TestBranch:
    """
    Tests the branching laws.
    """

    @staticmethod
    def test_psi12():
        result = endocalc.branch(mk_cycle(2, (1,)), PSI12)
        assert result.complete
        assert result.decomposition == Decomposition.from_class(
            mk_cycle(2, (1, 2))
        )

    @staticmethod
    def test_psi13():
        result = endocalc.branch(mk_cycle(2, (1,)), PSI13)
        assert result.complete
        assert result.decomposition.classes == (mk_cycle(2, (2,)),)

    @staticmethod
    def test_identity():
        rep = mk_cycle(2, (1, 2))
        result = endocalc.branch(rep, ENDOS["id2"])
        assert result.decomposition == Decomposition.from_class(rep)

    @staticmethod
    def test_chain_rejected():
        chain = mk_chain(2, LassoWord(2, (), (1,)))
        with pytest.raises(ValueError):
            endocalc.branch(chain, PSI12)

    @staticmethod
    def test_alphabet_mismatch():
        with pytest.raises(ValueError):
            endocalc.branch(mk_cycle(4, (1,)), PSI12)

    @staticmethod
    def test_branch_decomposition():
        value = Decomposition(2, ((mk_cycle(2, (1,)), 2),))
        result = endocalc.branch_decomposition(value, PSI12)
        assert result.complete
        assert result.decomposition.multiplicity(mk_cycle(2, (1, 2))) == 2
