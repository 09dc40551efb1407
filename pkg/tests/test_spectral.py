"""Floating-point oracles: residuals on grids, Gram matrices under the true
weight, numeric ladder application, and the exact-rational degeneracy table."""

from fractions import Fraction

import numpy as np
import pytest

from xsuperint.errors import NumericalOverflowError, QuadratureError
from xsuperint.params import ModelParams, QuantumState, energy_ratio
from xsuperint.spectral import (
    angular_gram,
    degeneracy_chain_ok,
    degeneracy_table,
    hamiltonian_residual,
    hamiltonian_residual_fd,
    ladder_numeric_check,
    radial_values,
    wavefunction_on_grid,
)

P13 = ModelParams(Fraction(1), Fraction(3))


def kparams(p, q, alpha=Fraction(1), beta=Fraction(3)):
    return ModelParams(alpha, beta, p=p, q=q)


def test_radial_values_overflow_guard():
    r = np.linspace(0.5, 3.0, 16)
    with pytest.raises(NumericalOverflowError):
        radial_values(0, Fraction(4000), 1.0, r)


def test_radial_values_at_origin():
    vals = radial_values(1, Fraction(5), 1.0, np.array([0.0, 1.0]))
    assert vals[0] == 0.0
    assert np.isfinite(vals[1]) and vals[1] != 0.0


@pytest.mark.parametrize("p,q", [(1, 1), (2, 1), (1, 2), (3, 2)])
def test_hamiltonian_residual_small(p, q):
    params = kparams(p, q)
    for state in (QuantumState(0, 1), QuantumState(1, 2)):
        assert hamiltonian_residual(state, params) < 1e-9


def test_candidate_potential_is_a_negative_control():
    res = hamiltonian_residual(QuantumState(0, 1), P13,
                               candidate_potential=True)
    assert res > 1e-2


def test_residual_fd_agrees():
    exact = hamiltonian_residual(QuantumState(0, 2), P13)
    fd = hamiltonian_residual_fd(QuantumState(0, 2), P13)
    assert exact < 1e-9
    # second-order stencil: small, but nowhere near the closed-form figure
    assert fd < 1e-3


@pytest.mark.parametrize("alpha,beta", [
    (Fraction(1), Fraction(3)),
    (Fraction(1, 2), Fraction(5, 2)),
])
def test_angular_gram_orthogonality(alpha, beta):
    g = angular_gram(alpha, beta, nmax=6)
    off = g - np.diag(np.diag(g))
    assert float(np.max(np.abs(off))) < 1e-12
    assert np.allclose(np.diag(g), 1.0)


def test_angular_gram_impossible_tolerance():
    with pytest.raises(QuadratureError):
        angular_gram(Fraction(1), Fraction(3), nmax=4, tol=0.0, max_order=256)


@pytest.mark.parametrize("p,q", [(1, 1), (2, 1), (1, 2), (3, 2)])
def test_ladder_numeric_ok(p, q):
    params = kparams(p, q)
    up = ladder_numeric_check(QuantumState(p, 1), params, raising=True)
    assert up.status == "OK"
    assert up.deviation < 1e-8
    assert up.ratio_error is not None and up.ratio_error < 1e-10
    down = ladder_numeric_check(QuantumState(0, 1 + q), params, raising=False)
    assert down.status == "OK"
    assert down.deviation < 1e-8


def test_ladder_numeric_annihilated():
    up = ladder_numeric_check(QuantumState(0, 1), P13, raising=True)
    assert up.status == "ANNIHILATED"
    down = ladder_numeric_check(QuantumState(2, 1), P13, raising=False)
    assert down.status == "ANNIHILATED"


def test_degeneracy_table_structure():
    levels = degeneracy_table(P13, emax=14.0)
    ratios = [lv.ratio for lv in levels]
    assert ratios == sorted(ratios)
    assert all(lv.energy == float(lv.ratio) for lv in levels)
    # k = 1 at (1,3): E/omega = 2m + 2n + 4
    assert ratios[0] == 6
    mult = {lv.ratio: lv.multiplicity for lv in levels}
    assert mult[Fraction(8)] == 2
    assert mult[Fraction(12)] == 4
    lv8 = next(lv for lv in levels if lv.ratio == 8)
    assert lv8.states == (QuantumState(1, 1), QuantumState(0, 2))


def test_degeneracy_chain_step():
    params = kparams(3, 2)       # k = 3/2; within-level step (-3, +2)
    levels = degeneracy_table(params, emax=40.0)
    fat = [lv for lv in levels if lv.multiplicity >= 2]
    assert fat, "expected at least one degenerate level below the cutoff"
    for lv in fat:
        assert degeneracy_chain_ok(lv, params)
        for s, t in zip(lv.states, lv.states[1:]):
            assert (t.m - s.m, t.n - s.n) == (-3, 2)


def test_degeneracy_energies_are_exact():
    params = kparams(1, 2)       # k = 1/2
    levels = degeneracy_table(params, emax=20.0)
    for lv in levels:
        for st in lv.states:
            assert energy_ratio(st, params) == lv.ratio


def test_empty_degeneracy_table():
    assert degeneracy_table(P13, emax=0.0) == []
    assert degeneracy_table(P13, emax=5.9) == []


def test_wavefunction_grid_shape_and_sign():
    r = np.linspace(0.2, 2.5, 30)
    phi = np.linspace(0.05, float(P13.wedge_span) - 0.05, 25)
    psi = wavefunction_on_grid(QuantumState(0, 1), P13, r, phi)
    assert psi.shape == (30, 25)
    assert np.all(np.isfinite(psi))
    # nodeless ground state: a single sign on the open wedge
    assert np.all(psi > 0) or np.all(psi < 0)
