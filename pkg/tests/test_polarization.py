"""Recursive polarization construction with certificates.  The worked
example below is traced by hand: for the cotangent pair over the
nonabelian 2-dim algebra and the form dual to the first cotangent
direction, the semisimple anchor is the first base vector, the graded
pieces are one-dimensional of weights +1 and -1, and the polarization is
spanned by both plus-weight vectors and the fixed line."""

from fractions import Fraction as Q

import pytest

from sympair.errors import BaseCaseUnsupported
from sympair.lie_core import Subspace
from sympair.pairs import (
    form_centralizer,
    kf_pf,
    xf_of_form,
)
from sympair.polarization import (
    construct_polarization,
    pukanszky_check,
    sample_polarizable_forms,
    verify_polarization,
)


def q(*vals):
    return tuple(Q(v) for v in vals)


# ----------------------------------------------------------- worked example

def test_aff1_cotangent_worked_example(cot_aff1):
    f = q(1, 0)
    pol = construct_polarization(cot_aff1, f)
    assert pol.base_case == "AbelianIdealP"
    assert pol.b.dim == 3
    assert pol.b == Subspace.span(
        cot_aff1.g, [q(1, 0, 0, 0), q(0, 1, 0, 0), q(0, 0, 1, 0)]
    )
    assert len(pol.trace) == 2
    first = pol.trace[0]
    assert first.x_f == q(1, 0, 0, 0)
    assert first.x_s == q(1, 0, 0, 0)
    assert first.x_u == q(0, 0, 0, 0)
    assert sorted(first.eigenvalues) == [Q(-1), Q(1)]
    assert first.delta == (Q(1),)
    assert first.dim_n == 1
    assert first.g0.dim == 2
    assert pol.trace[1].terminal
    cert = verify_polarization(cot_aff1, f, pol.b)
    assert cert.passed, cert.checks
    assert [name for name, _, _ in cert.checks] == [
        "subalgebra",
        "sigma_stable",
        "bf_isotropic",
        "dimension",
    ]
    puk = pukanszky_check(cot_aff1, f, pol.b)
    assert puk.passed
    assert form_centralizer(cot_aff1, f).dim == 2


def test_abelian_cotangent_polarization_is_everything(cot_abelian2):
    f = q(3, -2)
    pol = construct_polarization(cot_abelian2, f)
    assert pol.base_case == "AbelianIdealP"
    assert pol.b.dim == 4
    assert verify_polarization(cot_abelian2, f, pol.b).passed
    assert pukanszky_check(cot_abelian2, f, pol.b).passed


def test_zero_form_on_swap_gives_whole_algebra(swap_sl2):
    f = q(0, 0, 0)
    pol = construct_polarization(swap_sl2, f)
    assert pol.base_case == "CentralSemisimplePart"
    assert pol.b.dim == 6
    assert verify_polarization(swap_sl2, f, pol.b).passed
    assert pukanszky_check(swap_sl2, f, pol.b).passed


def test_nilpotent_anchor_is_unsupported(swap_sl2):
    x = q(0, 1, 0, 0, 1, 0)  # nilpotent in both factors
    f = tuple(swap_sl2.b_value(x, v) for v in swap_sl2.p_basis.basis)
    assert xf_of_form(swap_sl2, f) == x
    with pytest.raises(BaseCaseUnsupported):
        construct_polarization(swap_sl2, f)


# ------------------------------------------------------- certificate checks

def test_certificates_reject_wrong_subspaces(cot_aff1):
    f = q(1, 0)
    g = cot_aff1.g
    k_only = cot_aff1.k_basis
    cert = verify_polarization(cot_aff1, f, k_only)
    assert not cert.passed
    failed = {name for name, ok, _ in cert.checks if not ok}
    assert "dimension" in failed
    whole = Subspace.whole(g)
    cert2 = verify_polarization(cot_aff1, f, whole)
    failed2 = {name for name, ok, _ in cert2.checks if not ok}
    assert "bf_isotropic" in failed2 and "dimension" in failed2
    # an abelian sigma-stable plane that misses the centralizer direction
    plane = Subspace.span(g, [q(0, 0, 1, 0), q(0, 0, 0, 1)])
    puk = pukanszky_check(cot_aff1, f, plane)
    assert not puk.passed


def test_certificate_as_dict_shape(cot_aff1):
    f = q(1, 0)
    pol = construct_polarization(cot_aff1, f)
    d = verify_polarization(cot_aff1, f, pol.b).as_dict()
    assert {c["name"] for c in d["checks"]} >= {"subalgebra", "dimension"}
    assert d["passed"] is True
    t = pol.trace[0].as_dict()
    assert t["dim_g"] == 4 and t["terminal"] is False


# -------------------------------------------------------- trace invariants

def assert_trace_invariants(pair, pol):
    for step in pol.trace:
        if step.terminal:
            continue
        g = step.pair.g
        spaces = [(Q(0), step.g0)] + list(step.parts)
        # the pieces fill the algebra
        assert sum(spc.dim for _, spc in spaces) == g.dim
        for lam, sa in spaces:
            for mu, sb in spaces:
                # pairing vanishes unless the weights cancel
                if lam + mu != 0:
                    for a in sa.basis:
                        for b in sb.basis:
                            assert step.pair.b_value(a, b) == 0
                # brackets respect the grading
                matches = [spc for nu, spc in spaces if nu == lam + mu]
                tgt = matches[0] if matches else Subspace.zero(g)
                for a in sa.basis:
                    for b in sb.basis:
                        assert tgt.contains(g.bracket(a, b))
        # strict shrink into the recursion
        assert step.sub.g.dim < g.dim
        assert step.sub.g.dim == step.g0.dim


def test_trace_invariants_on_sampled_forms(pairs):
    for name, pair in pairs.items():
        found, skipped = sample_polarizable_forms(pair, seed=5, count=4)
        assert len(found) == 4
        for f, pol in found:
            assert_trace_invariants(pair, pol)


# ------------------------------------------------------------- bulk sampling

def test_sampled_polarizations_certify(pairs):
    for name, pair in pairs.items():
        found, skipped = sample_polarizable_forms(pair, seed=3, count=5)
        assert len(found) == 5
        assert skipped["attempts"] >= 5
        for f, pol in found:
            assert verify_polarization(pair, f, pol.b).passed
            assert pukanszky_check(pair, f, pol.b).passed
            kf, pf = kf_pf(pair, f)
            assert kf.dim == pf.dim
            gf = form_centralizer(pair, f)
            assert all(gf.contains(pair.sigma_apply(v)) for v in gf.basis)


def test_sampling_is_deterministic(swap_sl2):
    a, sk_a = sample_polarizable_forms(swap_sl2, seed=11, count=3)
    b, sk_b = sample_polarizable_forms(swap_sl2, seed=11, count=3)
    assert [f for f, _ in a] == [f for f, _ in b]
    assert sk_a == sk_b


def test_polarization_dimension_formula_holds(pairs):
    for pair in pairs.values():
        found, _ = sample_polarizable_forms(pair, seed=18, count=2)
        for f, pol in found:
            gf = form_centralizer(pair, f)
            assert 2 * pol.b.dim == pair.g.dim + gf.dim
