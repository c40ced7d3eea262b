from dataclasses import replace

import pytest
from hypothesis import given
from hypothesis import strategies as st

from coendcheck import fibre
from coendcheck.exactla import Mat
from coendcheck.fixtures import FIXTURE_NAMES, make_fixture, make_ho_c2, make_rep_group
from coendcheck.fibre import (change_fibre_basis, check_braided_compat, check_coherence,
                              check_duality_compat, check_frobenius_conditions,
                              check_separability, check_u_irreducibility,
                              check_u_naturality, check_utrace_compat, validate_functor)
from coendcheck.lincat import CatPresentation
from coendcheck.report import INFO, PresentationError
from helpers import make_split_unit
from strategies import invertible, nonzero_rationals

ALL_CHECKS = [validate_functor, check_coherence, check_separability,
              check_frobenius_conditions, check_braided_compat, check_duality_compat,
              check_u_naturality, check_utrace_compat]


def verdicts(cat, mon, U):
    out = [f(cat, mon, U).verdict for f in ALL_CHECKS]
    out.append(check_u_irreducibility(cat, U)[0].verdict)
    return out


class TestValidateFunctor:
    @pytest.mark.parametrize("name", FIXTURE_NAMES)
    def test_fixtures(self, name):
        cat, mon, U = make_fixture(name)
        assert validate_functor(cat, mon, U).passed
        assert check_coherence(cat, mon, U).passed

    def test_negated_generator(self):
        cat, mon, U = make_rep_group("c2")
        mor = dict(U.mor)
        mor[("sigma", "sigma")] = (-Mat.identity(1),)
        rep = validate_functor(cat, mon, replace(U, mor=mor))
        assert rep.failed
        assert "composition" in rep.info["failures"]

    def test_non_natural_r(self):
        from helpers import corrupted_split_unit
        rep = validate_functor(*corrupted_split_unit())
        assert rep.witness["law"] == "r naturality"

    def test_zero_unit_dimension_rejected(self):
        cat, mon, U = make_rep_group("c2")
        dim = dict(U.dim, **{"1": 0})
        with pytest.raises(PresentationError):
            fibre.check_functor_structure(cat, mon, replace(U, dim=dim))


class TestSeparability:
    def test_rep_c2_strong(self):
        rep = check_separability(*make_rep_group("c2"))
        assert rep.passed and rep.info["i0r0"] == "1"

    def test_ho_c2(self):
        rep = check_separability(*make_ho_c2())
        assert rep.passed and rep.info["i0r0"] == "2" and rep.info["dim_UI"] == 2

    def test_ho_c2_doubled_r0(self):
        cat, mon, U = make_ho_c2()
        rep = check_separability(cat, mon, replace(U, r0=U.r0 * 2))
        assert rep.failed and rep.witness["law"] == "i0 r0 = dim UI"


class TestFrobenius:
    @pytest.mark.parametrize("name", ["trivial", "rep-c2", "rep-c2c2"])
    def test_strong_functors(self, name):
        rep = check_frobenius_conditions(*make_fixture(name))
        assert rep.verdict == INFO and rep.holds

    def test_ho_c2_recorded(self):
        rep = check_frobenius_conditions(*make_ho_c2())
        assert rep.verdict == INFO
        assert "holds" in rep.info


class TestBraided:
    @pytest.mark.parametrize("name", ["trivial", "rep-c2", "rep-c2c2"])
    def test_strong_functors(self, name):
        assert check_braided_compat(*make_fixture(name)).passed

    def test_negated_braiding(self):
        cat, mon, U = make_rep_group("c2")
        braid = dict(mon.braid)
        braid[("sigma", "sigma")] = Mat.column([-1])
        rep = check_braided_compat(cat, replace(mon, braid=braid), U)
        assert rep.failed and rep.witness["objects"] == ["sigma", "sigma"]

    def test_ho_c2_square_does_not_commute(self):
        # r[C][D] glues summands asymmetrically; the square fails for C != D
        rep = check_braided_compat(*make_ho_c2())
        assert rep.failed and rep.witness["objects"] == ["1", "sigma"]


class TestDuality:
    @pytest.mark.parametrize("name", FIXTURE_NAMES)
    def test_fixtures(self, name):
        assert check_duality_compat(*make_fixture(name)).passed

    def test_scaled_pairing(self):
        # one triangle is linear in u, the other in u^-1: both move
        cat, mon, U = make_rep_group("c2")
        u = dict(U.u, sigma=U.u["sigma"] * 2)
        rep = check_duality_compat(cat, mon, replace(U, u=u))
        assert rep.failed
        assert rep.info["failures"] == {"(e,i,i0)": 1, "(n,r,r0)": 1}

    def test_ho_c2_identity_pairing_fails(self):
        cat, mon, U = make_ho_c2()
        u = dict(U.u, sigma=Mat.identity(2))
        assert check_duality_compat(cat, mon, replace(U, u=u)).failed

    def test_singular_pairing(self):
        cat, mon, U = make_rep_group("c2")
        u = dict(U.u, sigma=Mat.zeros(1, 1))
        rep = check_duality_compat(cat, mon, replace(U, u=u))
        assert rep.witness["law"] == "u invertible"


class TestTrace:
    @pytest.mark.parametrize("name", FIXTURE_NAMES)
    def test_fixtures(self, name):
        assert check_utrace_compat(*make_fixture(name)).passed

    @given(nonzero_rationals)
    def test_scaling_sensitive(self, lam):
        cat, mon, U = make_ho_c2()
        ev = dict(mon.ev)
        ev["sigma"] = mon.ev["sigma"] * lam
        rep = check_utrace_compat(cat, replace(mon, ev=ev), U)
        assert rep.passed == (lam == 1)


class TestIrreducibility:
    def test_rep_c2(self):
        rep, grading = check_u_irreducibility(*make_rep_group("c2")[::2])
        assert rep.passed and grading == {1: ["1", "sigma"]}

    def test_ho_c2(self):
        cat, _, U = make_ho_c2()
        rep, grading = check_u_irreducibility(cat, U)
        assert rep.passed and grading == {2: ["1", "sigma"]}

    def test_mixed_dimensions(self):
        one = Mat.identity(1)
        cat = CatPresentation(
            ("A", "B"),
            {("A", "A"): 1, ("B", "B"): 1, ("A", "B"): 1, ("B", "A"): 0},
            {("A", "A", "A"): one, ("B", "B", "B"): one, ("A", "A", "B"): one,
             ("A", "B", "B"): one},
            {"A": Mat.column([1]), "B": Mat.column([1])})
        U = fibre.FibreFunctor({"A": 1, "B": 2}, {}, {}, one, {}, one, {})
        rep, grading = check_u_irreducibility(cat, U)
        assert rep.failed and rep.witness["objects"] == ["A", "B"]
        assert grading == {1: ["A"], 2: ["B"]}


@given(st.data())
def test_verdicts_invariant_under_change_of_basis(data):
    name = data.draw(st.sampled_from(FIXTURE_NAMES))
    cat, mon, U = make_fixture(name)
    T = {a: data.draw(invertible(U.dim[a])) for a in cat.objects}
    V = change_fibre_basis(cat, mon, U, T)
    assert verdicts(cat, mon, V) == verdicts(cat, mon, U)


def test_split_unit_meets_every_hypothesis():
    cat, mon, U = make_split_unit()
    assert all(v in ("pass", "info") for v in verdicts(cat, mon, U))
