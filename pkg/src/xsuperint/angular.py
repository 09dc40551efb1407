"""The angular eigenproblem and the deformed (exceptional) polynomial family.

Pipeline, all exact:

  1. `angular_schrodinger_x` is the separated angular Hamiltonian pushed to the
     algebraic coordinate x = cos(2 k phi), in units of k^2.  Its potential
     carries an inverse-square deformation centered at the weight pole b.
  2. Conjugating by the bound-state gauge factor (known through its log
     derivative only) turns it into `angular_operator`, which maps polynomials
     to polynomials plus a controlled (x - b) pole.
  3. `exceptional_jacobi` solves the operator eigenproblem exactly, degree by
     degree, as a rational nullspace computation.  The family starts at degree
     1 — there is no degree-0 member.

`angular_operator_candidate` is a verbatim transcription of a circulating
closed form for the same operator.  It is kept, applied, and scored — never
silently corrected: `reconcile_family` reports where the two constructions
disagree.  (The candidate admits a degree-1 eigenpolynomial that differs from
the closed-form family, and no eigenpolynomial at all for degree >= 2; the
derived operator reproduces the closed-form family at every degree.)
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional

from .errors import NoSolutionError, NonUniqueSolutionError
from .operators import DiffOp, RatFunc
from .polynomials import (Poly, RationalLike, as_fraction,
                          exceptional_jacobi_closed_form, poly_gcd, weight_pole)
from .params import angular_eigenroot
from .utils import fraction_nullspace


def angular_gauge_logderiv(alpha: RationalLike, beta: RationalLike) -> RatFunc:
    """(log G)' for the angular gauge factor
    G = (1-x)^(alpha/2 + 1/4) (1+x)^(beta/2 + 1/4) / (x - b).

    G itself involves irrational powers; its log derivative is rational, which
    is all the algebra ever needs.
    """
    alpha = as_fraction(alpha)
    beta = as_fraction(beta)
    b = weight_pole(alpha, beta)
    e1 = alpha / 2 + Fraction(1, 4)
    e2 = beta / 2 + Fraction(1, 4)
    return (RatFunc(Poly.constant(e1), Poly((-1, 1)))      # e1 / (x - 1)
            + RatFunc(Poly.constant(e2), Poly((1, 1)))     # e2 / (x + 1)
            - RatFunc(Poly.one(), Poly((-b, 1))))          # -1 / (x - b)


def angular_potential(alpha: RationalLike, beta: RationalLike) -> RatFunc:
    """Angular potential in x = cos(2 k phi), per k^2:

        2(alpha^2 - 1/4)/(1 - x) + 2(beta^2 - 1/4)/(1 + x) + 8(1 - b x)/(x - b)^2.

    The last term is the deformation; its strength is pinned by requiring the
    double pole at x = b to cancel after gauge conjugation, which is what makes
    a complete polynomial eigenfamily possible.
    """
    alpha = as_fraction(alpha)
    beta = as_fraction(beta)
    b = weight_pole(alpha, beta)
    pole = Poly((-b, 1))
    return (RatFunc(Poly.constant(2 * (alpha * alpha - Fraction(1, 4))), Poly((1, -1)))
            + RatFunc(Poly.constant(2 * (beta * beta - Fraction(1, 4))), Poly((1, 1)))
            + RatFunc(Poly((8, -8 * b)), pole * pole))


def angular_potential_candidate(alpha: RationalLike, beta: RationalLike) -> RatFunc:
    """Verbatim candidate potential whose deformation term reads
    4(1 + b x)/(b + x)^2 instead.  Kept for reconciliation; with this term the
    gauge-conjugated operator has no polynomial eigenfamily past degree 1.
    """
    alpha = as_fraction(alpha)
    beta = as_fraction(beta)
    b = weight_pole(alpha, beta)
    pole = Poly((b, 1))
    return (RatFunc(Poly.constant(2 * (alpha * alpha - Fraction(1, 4))), Poly((1, -1)))
            + RatFunc(Poly.constant(2 * (beta * beta - Fraction(1, 4))), Poly((1, 1)))
            + RatFunc(Poly((4, 4 * b)), pole * pole))


def angular_schrodinger_x(alpha: RationalLike, beta: RationalLike,
                          candidate_potential: bool = False) -> DiffOp:
    """Separated angular Hamiltonian in x = cos(2 k phi), per k^2:

        4(x^2 - 1) d^2 + 4x d + V(x),

    i.e. -(1/k^2) d^2/dphi^2 + V(cos 2 k phi) after the change of variables.
    Its eigenvalues on the bound family are A_n^2.
    """
    v = angular_potential_candidate(alpha, beta) if candidate_potential \
        else angular_potential(alpha, beta)
    return DiffOp((v, RatFunc(Poly((0, 4))), RatFunc(Poly((-4, 0, 4)))))


def angular_operator(alpha: RationalLike, beta: RationalLike) -> DiffOp:
    """The polynomial-picture angular operator: the gauge conjugate
    G^{-1} H G of `angular_schrodinger_x` by the bound-state factor G.

    Acts on the deformed polynomial family with eigenvalue A_n^2; images of
    polynomials are polynomials plus a simple (x-b) pole that cancels on the
    eigenfamily.
    """
    h = angular_schrodinger_x(alpha, beta)
    g = angular_gauge_logderiv(alpha, beta)
    return h.gauge_conjugate(-g)


def angular_operator_candidate(alpha: RationalLike, beta: RationalLike) -> DiffOp:
    """Verbatim candidate closed form for the polynomial-picture operator:

        4(x^2-1) d^2 + [4(beta-alpha)(1-bx)/(b-x)] ((x+b) d - 1) + (alpha+beta+1)^2.

    Transcribed as printed and scored against the derived operator.
    """
    alpha = as_fraction(alpha)
    beta = as_fraction(beta)
    b = weight_pole(alpha, beta)
    rat = RatFunc(Poly((4 * (beta - alpha), -4 * b * (beta - alpha))), Poly((b, -1)))
    first = rat * RatFunc(Poly((b, 1)))
    zeroth = -rat + Fraction((alpha + beta + 1) ** 2)
    return DiffOp((zeroth, first, RatFunc(Poly((-4, 0, 4)))))


# ---------------------------------------------------------------------------
# Exact eigenpolynomial solver
# ---------------------------------------------------------------------------

def _poly_lcm(a: Poly, b: Poly) -> Poly:
    if a.is_zero() or b.is_zero():
        return Poly.zero()
    return (a * b).div_exact(poly_gcd(a, b)).monic()


def _falling(i: int, j: int) -> int:
    out = 1
    for l in range(j):
        out *= i - l
    return out


def solve_eigenpolynomial(op: DiffOp, degree: int, eigenvalue: Fraction) -> Poly:
    """The unique-up-to-scale polynomial u of exactly the given degree with

        D(x) * (op u - eigenvalue * u) == 0   identically,

    where D is the common denominator of op's coefficients.  Returns the monic
    representative.  Raises NoSolutionError / NonUniqueSolutionError when the
    cleared linear system has no rank-deficiency of exactly one in the right
    place — that is the oracle that flags a wrong eigenvalue or a defective
    operator, rather than silently returning garbage.
    """
    shifted = op - DiffOp.identity().premultiply(Fraction(eigenvalue))
    denom = Poly.one()
    for c in shifted.coeffs:
        denom = _poly_lcm(denom, c.den)
    cleared = [(c * RatFunc(denom)).as_poly() for c in shifted.coeffs]

    ncols = degree + 1
    max_row = 0
    for j, a in enumerate(cleared):
        if not a.is_zero():
            max_row = max(max_row, a.degree + degree - j)
    rows = [[Fraction(0)] * ncols for _ in range(max_row + 1)]
    for j, a in enumerate(cleared):
        if a.is_zero():
            continue
        for i in range(j, ncols):
            fall = _falling(i, j)
            for t, coef in enumerate(a.coeffs):
                if coef:
                    rows[t + i - j][i] += fall * coef

    basis = fraction_nullspace(rows, ncols)
    if not basis:
        raise NoSolutionError(
            f"no polynomial of degree <= {degree} satisfies the cleared "
            f"eigen-identity at eigenvalue {eigenvalue}")
    if len(basis) > 1:
        raise NonUniqueSolutionError(
            f"eigenpolynomial at eigenvalue {eigenvalue} is not unique "
            f"(nullspace dimension {len(basis)})")
    vec = basis[0]
    if vec[degree] == 0:
        raise NoSolutionError(
            f"the unique eigenpolynomial at eigenvalue {eigenvalue} has degree "
            f"< {degree} (no degree-{degree} member)")
    return Poly(vec).monic()


@lru_cache(maxsize=None)
def _exceptional_jacobi_cached(n: int, alpha: Fraction, beta: Fraction) -> Poly:
    op = angular_operator(alpha, beta)
    lam = angular_eigenroot(n, alpha, beta) ** 2
    return solve_eigenpolynomial(op, n, lam)


def exceptional_jacobi(n: int, alpha: RationalLike, beta: RationalLike) -> Poly:
    """Monic degree-n member of the deformed family, obtained as the exact
    eigenpolynomial of `angular_operator` at eigenvalue A_n^2 = (2n-1+alpha+beta)^2.

    This is the authoritative construction; `exceptional_jacobi_closed_form`
    provides the independent two-term combination it is reconciled against.
    """
    if n < 1:
        raise ValueError("the deformed family starts at degree 1")
    return _exceptional_jacobi_cached(n, as_fraction(alpha), as_fraction(beta))


def exceptional_jacobi_candidate_solve(n: int, alpha: RationalLike,
                                       beta: RationalLike) -> Poly:
    """Eigen-solve of the *candidate* operator at the same eigenvalue.

    Succeeds only at n = 1 (yielding x + b, which is NOT proportional to the
    closed-form family member); raises NoSolutionError for n >= 2.  Exposed so
    the reconciliation report can state the defect rather than hide it.
    """
    op = angular_operator_candidate(alpha, beta)
    lam = angular_eigenroot(n, alpha, beta) ** 2
    return solve_eigenpolynomial(op, n, lam)


# ---------------------------------------------------------------------------
# Reconciliation
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FamilyReconcileRow:
    n: int
    closed_form: Poly
    eigen: Poly
    closed_vs_eigen: str          # MATCH / MISMATCH
    ratio: Optional[Fraction]     # closed_form = ratio * eigen when MATCH
    candidate_eigen: Optional[Poly]
    candidate_verdict: str        # MATCH / MISMATCH / NO-SOLUTION
    candidate_detail: str


def reconcile_family(nmax: int, alpha: RationalLike, beta: RationalLike
                     ) -> list[FamilyReconcileRow]:
    """Compare, degree by degree, the closed-form family against (a) the
    derived-operator eigenfamily and (b) the candidate-operator eigen-solve.
    Emits MATCH/MISMATCH verdicts with both polynomials; never reconciles
    silently.
    """
    if nmax < 1:
        raise ValueError("nmax must be >= 1")
    alpha = as_fraction(alpha)
    beta = as_fraction(beta)
    rows = []
    for n in range(1, nmax + 1):
        closed = exceptional_jacobi_closed_form(n, alpha, beta)
        eig = exceptional_jacobi(n, alpha, beta)
        ratio = closed.proportionality(eig)
        verdict = "MATCH" if ratio not in (None, 0) else "MISMATCH"
        try:
            cand = exceptional_jacobi_candidate_solve(n, alpha, beta)
        except NoSolutionError as exc:
            rows.append(FamilyReconcileRow(
                n, closed, eig, verdict, ratio, None, "NO-SOLUTION",
                f"candidate operator: {exc}"))
            continue
        cratio = closed.proportionality(cand)
        if cratio not in (None, 0):
            cverdict, detail = "MATCH", "candidate eigen-solve proportional to closed form"
        else:
            cverdict = "MISMATCH"
            detail = (f"closed form {closed.pretty()} vs candidate-operator "
                      f"eigen {cand.pretty()} — not proportional")
        rows.append(FamilyReconcileRow(n, closed, eig, verdict, ratio, cand,
                                       cverdict, detail))
    return rows
