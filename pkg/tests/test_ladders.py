"""Ladder layer: classical Jacobi shifts, the intertwiner pair, deformed and
radial one-step ladders, fixed-energy composites, and the index-reflection
pairing of the chains."""

from fractions import Fraction

import pytest

from xsuperint.errors import (InsufficientSpanError, OutOfFamilyError,
                              VerificationError)
from xsuperint.ladders import (
    action_coefficient,
    claimed_deformed_lowering_action,
    claimed_deformed_raising_action,
    claimed_lowering_chain_action,
    claimed_raising_chain_action,
    claimed_raising_intertwiner_action,
    composite_lowering,
    composite_raising,
    deformed_lowering,
    deformed_lowering_action,
    deformed_lowering_chain,
    deformed_lowering_chain_action,
    deformed_raising,
    deformed_raising_action,
    deformed_raising_action_monic,
    deformed_raising_chain,
    deformed_raising_chain_action,
    derive_lowering_intertwiner,
    derive_raising_intertwiner,
    jacobi_lowering,
    jacobi_lowering_action,
    jacobi_lowering_candidate,
    jacobi_raising,
    jacobi_raising_action,
    jacobi_raising_candidate,
    l1_noncommutation,
    lowering_intertwiner,
    lowering_intertwiner_action,
    lowering_intertwiner_candidate,
    parity_report,
    radial_eps,
    radial_family_image,
    radial_lowering,
    radial_lowering_action,
    radial_lowering_candidate,
    radial_lowering_chain,
    radial_lowering_chain_action,
    radial_raising,
    radial_raising_action,
    radial_raising_chain,
    radial_raising_chain_action,
    raising_intertwiner,
    raising_intertwiner_action,
    raising_intertwiner_candidate,
    shifted_jacobi,
)
from xsuperint.operators import RatFunc
from xsuperint.params import ModelParams, QuantumState, angular_eigenroot
from xsuperint.polynomials import (Poly, exceptional_jacobi_closed_form,
                                   jacobi_polynomial, laguerre_polynomial)

A13 = (Fraction(1), Fraction(3))
PAIRS = [A13, (Fraction(1, 2), Fraction(5, 2))]


@pytest.mark.parametrize("alpha,beta", PAIRS)
def test_jacobi_ladders_map_basis_to_basis(alpha, beta):
    for n in range(1, 6):
        low = jacobi_lowering(n, alpha, beta)
        coeff = action_coefficient(low, jacobi_polynomial(n, alpha, beta),
                                   jacobi_polynomial(n - 1, alpha, beta))
        assert coeff == jacobi_lowering_action(n, alpha, beta)
    for n in range(0, 5):
        high = jacobi_raising(n, alpha, beta)
        coeff = action_coefficient(high, jacobi_polynomial(n, alpha, beta),
                                   jacobi_polynomial(n + 1, alpha, beta))
        assert coeff == jacobi_raising_action(n, alpha, beta)


def test_jacobi_candidates_leave_the_family():
    # at the shifted parameters the candidates move degree correctly but the
    # image is not on the target line
    alpha, beta = Fraction(2), Fraction(2)
    for n in (1, 2, 3):
        with pytest.raises(VerificationError):
            action_coefficient(jacobi_lowering_candidate(n, alpha, beta),
                               jacobi_polynomial(n, alpha, beta),
                               jacobi_polynomial(n - 1, alpha, beta))
        with pytest.raises(VerificationError):
            action_coefficient(jacobi_raising_candidate(n, alpha, beta),
                               jacobi_polynomial(n, alpha, beta),
                               jacobi_polynomial(n + 1, alpha, beta))


@pytest.mark.parametrize("alpha,beta", PAIRS)
def test_intertwiner_actions(alpha, beta):
    fwd = raising_intertwiner(alpha, beta)
    back = lowering_intertwiner(alpha, beta)
    for n in range(0, 5):
        coeff = action_coefficient(
            fwd, shifted_jacobi(n, alpha, beta),
            exceptional_jacobi_closed_form(n + 1, alpha, beta))
        assert coeff == raising_intertwiner_action(n, alpha, beta)
    for n in range(1, 6):
        coeff = action_coefficient(
            back, exceptional_jacobi_closed_form(n, alpha, beta),
            shifted_jacobi(n - 1, alpha, beta))
        assert coeff == lowering_intertwiner_action(n, alpha, beta)


@pytest.mark.parametrize("alpha,beta", PAIRS)
def test_derived_intertwiners_match_frozen_forms(alpha, beta):
    assert derive_raising_intertwiner(alpha, beta) == \
        raising_intertwiner(alpha, beta)
    assert derive_lowering_intertwiner(alpha, beta) == \
        lowering_intertwiner(alpha, beta)


def test_claimed_forward_action_is_index_dependent():
    alpha, beta = A13
    ratios = [claimed_raising_intertwiner_action(n, alpha, beta)
              / raising_intertwiner_action(n, alpha, beta)
              for n in range(4)]
    assert ratios == [0, Fraction(-1, 2), Fraction(-2, 3), Fraction(-3, 4)]


def test_forward_candidate_free_scalar():
    # alpha != 1: exactly one scalar makes the candidate intertwine, and that
    # choice reproduces the derived operator
    alpha, beta = Fraction(2), Fraction(7, 2)
    fixed = raising_intertwiner_candidate(alpha, beta, Fraction(2))
    assert fixed == raising_intertwiner(alpha, beta)
    broken = raising_intertwiner_candidate(alpha, beta, Fraction(1))
    with pytest.raises(VerificationError):
        action_coefficient(broken, shifted_jacobi(1, alpha, beta),
                           exceptional_jacobi_closed_form(2, alpha, beta))


def test_forward_candidate_degenerates_at_alpha_one():
    # the scalar multiplies (alpha - 1): at alpha = 1 the zeroth-order term is
    # gone for every choice and constants are annihilated instead of raised
    for t in (Fraction(0), Fraction(1), Fraction(-17, 3)):
        cand = raising_intertwiner_candidate(*A13, t)
        assert cand.apply_poly(Poly.constant(1)).is_zero()


def test_backward_candidate_keeps_a_pole():
    alpha, beta = A13
    cand = lowering_intertwiner_candidate(alpha, beta)
    img = cand.apply_ratfunc(
        RatFunc.of(exceptional_jacobi_closed_form(2, alpha, beta)))
    assert img.den.degree >= 1
    assert img.den.evaluate(Fraction(-2)) == 0     # pole at x = -b


@pytest.mark.parametrize("alpha,beta", PAIRS)
def test_deformed_one_step_actions(alpha, beta):
    for n in range(1, 5):
        coeff = action_coefficient(
            deformed_raising(n, alpha, beta),
            exceptional_jacobi_closed_form(n, alpha, beta),
            exceptional_jacobi_closed_form(n + 1, alpha, beta))
        assert coeff == deformed_raising_action(n, alpha, beta)
    for n in range(2, 6):
        coeff = action_coefficient(
            deformed_lowering(n, alpha, beta),
            exceptional_jacobi_closed_form(n, alpha, beta),
            exceptional_jacobi_closed_form(n - 1, alpha, beta))
        assert coeff == deformed_lowering_action(n, alpha, beta)


@pytest.mark.parametrize("alpha,beta", PAIRS)
def test_deformed_lowering_annihilates_bottom(alpha, beta):
    img = deformed_lowering(1, alpha, beta).apply_poly(
        exceptional_jacobi_closed_form(1, alpha, beta))
    assert img.is_zero()
    assert deformed_lowering_action(1, alpha, beta) == 0


def test_deformed_claims_are_global_sign_flips():
    alpha, beta = A13
    for n in range(1, 5):
        assert claimed_deformed_raising_action(n, alpha, beta) == \
            -deformed_raising_action(n, alpha, beta)
    for n in range(2, 6):
        assert claimed_deformed_lowering_action(n, alpha, beta) == \
            -deformed_lowering_action(n, alpha, beta)


def test_deformed_chains_compose():
    alpha, beta = Fraction(1, 2), Fraction(5, 2)
    q = 2
    for n in (1, 2, 3):
        coeff = action_coefficient(
            deformed_raising_chain(n, q, alpha, beta),
            exceptional_jacobi_closed_form(n, alpha, beta),
            exceptional_jacobi_closed_form(n + q, alpha, beta))
        assert coeff == deformed_raising_chain_action(n, q, alpha, beta)
        assert coeff == (deformed_raising_action(n, alpha, beta)
                         * deformed_raising_action(n + 1, alpha, beta))
    coeff = action_coefficient(
        deformed_lowering_chain(4, q, alpha, beta),
        exceptional_jacobi_closed_form(4, alpha, beta),
        exceptional_jacobi_closed_form(2, alpha, beta))
    assert coeff == deformed_lowering_chain_action(4, q, alpha, beta)


def test_chain_claims_at_even_q_match():
    alpha, beta = A13
    # the one-step sign error cancels in pairs
    assert claimed_raising_chain_action(2, 2, alpha, beta) == \
        deformed_raising_chain_action(2, 2, alpha, beta)
    assert claimed_raising_chain_action(2, 3, alpha, beta) == \
        -deformed_raising_chain_action(2, 3, alpha, beta)
    assert claimed_lowering_chain_action(5, 2, alpha, beta) == \
        deformed_lowering_chain_action(5, 2, alpha, beta)


def test_radial_one_step_actions():
    a = Fraction(5)       # k * A_1 at (1, 3), k = 1
    for m in (1, 2, 3):
        eps = radial_eps(m, a)
        img = radial_family_image(radial_lowering(a, eps), m, a, a + 2)
        want = laguerre_polynomial(m - 1, a + 2) * radial_lowering_action(m, a)
        assert img == RatFunc.of(want)
    for m in (0, 1, 2):
        eps = radial_eps(m, a)
        img = radial_family_image(radial_raising(a, eps), m, a, a - 2)
        want = laguerre_polynomial(m + 1, a - 2) * radial_raising_action(m, a)
        assert img == RatFunc.of(want)


def test_radial_lowering_annihilates_bottom():
    a = Fraction(15, 2)
    img = radial_family_image(radial_lowering(a, radial_eps(0, a)), 0, a, a + 2)
    assert img == RatFunc.of(Poly.constant(0))


def test_radial_candidate_witnesses():
    a = Fraction(5)
    eps = radial_eps(0, a)
    cand = radial_lowering_candidate(a, eps)
    # bottom state: -(1+a) times itself instead of zero
    img = radial_family_image(cand, 0, a, a)
    assert img == RatFunc.of(Poly.constant(-(1 + a)))
    # above the bottom the image is not even polynomial over the target gauge
    img = radial_family_image(radial_lowering_candidate(a, radial_eps(1, a)),
                              1, a, a + 2)
    assert img.den.degree >= 1


def test_radial_chains():
    a = Fraction(5)
    p = 2
    m = 3
    eps = radial_eps(m, a)
    img = radial_family_image(radial_lowering_chain(a, eps, p), m, a, a + 2 * p)
    want = laguerre_polynomial(m - p, a + 2 * p) \
        * radial_lowering_chain_action(m, a, p)
    assert img == RatFunc.of(want)
    assert radial_lowering_chain_action(m, a, p) == 1       # (-1)^2
    assert radial_lowering_chain_action(1, a, p) == 0       # hits the bottom
    img = radial_family_image(radial_raising_chain(a, eps, p), m, a, a - 2 * p)
    want = laguerre_polynomial(m + p, a - 2 * p) \
        * radial_raising_chain_action(m, a, p)
    assert img == RatFunc.of(want)


def test_composite_steps_preserve_energy():
    params = ModelParams(*A13)       # p = q = 1, k = 1
    step = composite_raising(QuantumState(2, 1), params)
    assert step.target == QuantumState(1, 2)
    assert step.energy == step.eps * 2
    assert step.coefficient == -deformed_raising_action_monic(1, *A13)
    back = composite_lowering(QuantumState(1, 2), params)
    assert back.target == QuantumState(2, 1)
    assert back.energy == step.energy


def test_composite_out_of_family():
    params = ModelParams(*A13)
    with pytest.raises(OutOfFamilyError):
        composite_raising(QuantumState(0, 1), params)
    with pytest.raises(OutOfFamilyError):
        composite_lowering(QuantumState(0, 1), params)


def test_composite_coefficient_is_stepwise_product():
    params = ModelParams(Fraction(1), Fraction(3), p=3, q=2)   # k = 3/2
    state = QuantumState(4, 2)
    step = composite_raising(state, params)
    assert step.target == QuantumState(1, 4)
    expect = Fraction(-1) * deformed_raising_action_monic(2, *A13) \
        * deformed_raising_action_monic(3, *A13)
    assert step.coefficient == expect


def test_l1_noncommutation_reference_value():
    params = ModelParams(*A13)
    assert l1_noncommutation(QuantumState(1, 1), params) == -2880


def test_l1_noncommutation_interior_sweep():
    params = ModelParams(Fraction(1, 2), Fraction(5, 2), p=2, q=1)
    # interior: raising needs m >= p, lowering needs n > q
    for m in (2, 3, 4):
        for n in (1, 2, 3):
            assert l1_noncommutation(QuantumState(m, n), params) != 0
    for m in (0, 1, 2):
        for n in (2, 3, 4):
            assert l1_noncommutation(QuantumState(m, n), params,
                                     raising=False) != 0


@pytest.mark.parametrize("alpha,beta", PAIRS)
@pytest.mark.parametrize("p,q", [(1, 1), (2, 1)])
def test_parity_report_ok(alpha, beta, p, q):
    rep = parity_report(alpha, beta, p, q, nmax=6)
    assert rep.ok
    assert rep.negative_control_ok


def test_parity_report_needs_enough_nodes():
    with pytest.raises(InsufficientSpanError):
        parity_report(*A13, 1, 2, nmax=3)


def test_action_coefficient_rejects_wrong_target():
    alpha, beta = A13
    with pytest.raises(VerificationError):
        action_coefficient(deformed_raising(1, alpha, beta),
                           exceptional_jacobi_closed_form(1, alpha, beta),
                           exceptional_jacobi_closed_form(3, alpha, beta))
