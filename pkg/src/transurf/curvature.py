"""Symbolic curvature objects for translation surfaces z = f(u) + g(v).

The surface is described by its generator derivatives alpha = f' (a
polynomial in u alone) and beta = g' (a polynomial in v alone).  With
D = 1 + alpha^2 + beta^2 the classical Monge-patch formulas give

    H = ((1 + beta^2) alpha' + (1 + alpha^2) beta') / (2 D^(3/2))
    K = alpha' beta' / D^2

Two independent constructions of the Weingarten condition are provided and
cross-checked against each other:

* :func:`jacobian_direct` expands a fixed 22-term polynomial identity in
  alpha, beta and their derivatives (the closed form of the condition);
* :func:`jacobian_derived` computes dH/du * dK/dv - dH/dv * dK/du inside
  the radical algebra and clears the radical.

The same fixed term tables drive exact polynomial expansion, floating-point
evaluation and formal power-law substitution, so an entry error in either
table would be caught by any one of the three consumers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .poly import Poly2
from .radical import RadExpr

# Each entry: (integer coefficient, exponents of alpha, beta, alpha', beta',
# alpha'', beta'').  A condition value is the sum of the expanded entries.

# Closed form of dH/du dK/dv - dH/dv dK/du = 0 after clearing the radical.
JACOBIAN_CONDITION_TERMS: tuple[tuple[int, int, int, int, int, int, int], ...] = (
    (8, 1, 1, 3, 2, 0, 0),
    (-8, 1, 1, 2, 3, 0, 0),
    (-3, 0, 1, 1, 2, 1, 0),
    (3, 1, 0, 2, 1, 0, 1),
    (-2, 2, 1, 1, 2, 1, 0),
    (2, 1, 2, 2, 1, 0, 1),
    (-3, 0, 3, 1, 2, 1, 0),
    (3, 3, 0, 2, 1, 0, 1),
    (-3, 1, 0, 3, 0, 0, 1),
    (3, 0, 1, 0, 3, 1, 0),
    (3, 2, 1, 0, 3, 1, 0),
    (-3, 1, 2, 3, 0, 0, 1),
    (1, 0, 0, 1, 0, 1, 1),
    (-1, 0, 0, 0, 1, 1, 1),
    (1, 2, 0, 1, 0, 1, 1),
    (-1, 0, 2, 0, 1, 1, 1),
    (2, 0, 2, 1, 0, 1, 1),
    (-2, 2, 0, 0, 1, 1, 1),
    (1, 2, 2, 1, 0, 1, 1),
    (-1, 2, 2, 0, 1, 1, 1),
    (-1, 4, 0, 0, 1, 1, 1),
    (1, 0, 4, 1, 0, 1, 1),
)

# Numerator of the second Gaussian curvature: K_II = num / (4 D^(3/2)).
SECOND_GAUSSIAN_NUMERATOR_TERMS: tuple[tuple[int, int, int, int, int, int, int], ...] = (
    (-2, 2, 0, 2, 1, 0, 0),
    (-2, 0, 2, 1, 2, 0, 0),
    (2, 2, 0, 1, 2, 0, 0),
    (2, 0, 2, 2, 1, 0, 0),
    (2, 0, 0, 1, 2, 0, 0),
    (2, 0, 0, 2, 1, 0, 0),
    (1, 0, 1, 1, 0, 0, 1),
    (1, 1, 0, 0, 1, 1, 0),
    (1, 2, 1, 1, 0, 0, 1),
    (1, 1, 2, 0, 1, 1, 0),
    (1, 0, 3, 1, 0, 0, 1),
    (1, 3, 0, 0, 1, 1, 0),
)


def expand_condition_terms(table, al, be, alp, bep, alpp, bepp):
    """Sum a term table over any ring supporting +, * and integer powers.

    Used with Poly2 values (exact expansion), floats (pointwise evaluation)
    and formal power-law terms (exponent-lattice analysis).
    """
    total = None
    for c, e_al, e_be, e_alp, e_bep, e_alpp, e_bepp in table:
        term = c * al**e_al * be**e_be * alp**e_alp * bep**e_bep * alpp**e_alpp * bepp**e_bepp
        total = term if total is None else total + term
    return total


@dataclass(frozen=True)
class PolyGenerators:
    """Generator derivatives alpha = f'(u) and beta = g'(v), exact polynomials."""

    alpha: Poly2
    beta: Poly2

    def __post_init__(self):
        if self.alpha.depends_on("v"):
            raise ValueError("alpha must be a polynomial in u only")
        if self.beta.depends_on("u"):
            raise ValueError("beta must be a polynomial in v only")

    @classmethod
    def from_coeffs(cls, alpha_coeffs, beta_coeffs) -> PolyGenerators:
        return cls(Poly2.from_u_coeffs(alpha_coeffs), Poly2.from_v_coeffs(beta_coeffs))

    @property
    def m(self) -> int:
        """Degree of alpha (-1 for the zero polynomial)."""
        return self.alpha.degree("u")

    @property
    def n(self) -> int:
        return self.beta.degree("v")

    def delta(self) -> Poly2:
        """The squared-norm polynomial 1 + alpha^2 + beta^2, always >= 1."""
        return 1 + self.alpha * self.alpha + self.beta * self.beta

    def derivatives(self) -> tuple[Poly2, Poly2, Poly2, Poly2, Poly2, Poly2]:
        al, be = self.alpha, self.beta
        alp, bep = al.diff("u"), be.diff("v")
        return al, be, alp, bep, alp.diff("u"), bep.diff("v")


def mean_curvature_numerator(gen: PolyGenerators) -> Poly2:
    """The polynomial N with H = N * D^(-3/2)."""
    al, be, alp, bep, _, _ = gen.derivatives()
    return ((1 + be * be) * alp + (1 + al * al) * bep) * Fraction(1, 2)


def mean_curvature_expr(gen: PolyGenerators) -> RadExpr:
    return RadExpr(gen.delta(), {-3: mean_curvature_numerator(gen)})


def gauss_curvature_expr(gen: PolyGenerators) -> RadExpr:
    al_p = gen.alpha.diff("u")
    be_p = gen.beta.diff("v")
    return RadExpr(gen.delta(), {-4: al_p * be_p})


def jacobian_direct(gen: PolyGenerators) -> Poly2:
    """Closed-form Weingarten condition polynomial, expanded exactly.

    The surface is Weingarten iff the result is identically zero.
    """
    return expand_condition_terms(JACOBIAN_CONDITION_TERMS, *gen.derivatives())


def jacobian_derived(gen: PolyGenerators) -> tuple[Poly2, Poly2]:
    """Weingarten condition computed from H and K inside the radical algebra.

    Returns the pair (n_even, n_odd) of the value
    dH/du * dK/dv - dH/dv * dK/du cleared against the fixed denominator
    D^6, i.e. the Jacobian equals (n_even + n_odd * sqrt(D)) / D^6.  The
    surface satisfies the Weingarten condition iff both components vanish
    identically.  Clearing to a fixed power keeps the relation to
    :func:`jacobian_direct` uniform across surfaces.
    """
    h = mean_curvature_expr(gen)
    k = gauss_curvature_expr(gen)
    jac = h.diff("u") * k.diff("v") - h.diff("v") * k.diff("u")
    n_even, n_odd, k_min = jac.as_cleared_numerator()
    if n_even.is_zero and n_odd.is_zero:
        return n_even, n_odd
    shift = k_min + 6
    if shift < 0:
        raise RuntimeError("unexpected radical structure in the curvature Jacobian")
    d_pow = gen.delta() ** shift
    return n_even * d_pow, n_odd * d_pow


def kii_numerator(gen: PolyGenerators) -> Poly2:
    """Numerator polynomial of the second Gaussian curvature (denominator 4 D^(3/2))."""
    return expand_condition_terms(SECOND_GAUSSIAN_NUMERATOR_TERMS, *gen.derivatives())


def jacobian_linear_beta(alpha: Poly2, a: Fraction | int, b: Fraction | int) -> Poly2:
    """Weingarten condition specialized to beta = a*v + b, a != 0.

    Seven-term reduction of the closed form.  Note: the fourth coefficient
    is -2a^2, not -2a; the -2a variant fails the cross-check against both
    the closed form and the derived Jacobian for a != 1.
    """
    if a == 0:
        raise ValueError("linear beta needs a nonzero slope")
    al = alpha
    alp = al.diff("u")
    alpp = alp.diff("u")
    be = Poly2({(0, 1): a, (0, 0): b})
    a = Fraction(a)
    return (
        8 * a**2 * al * be * alp**3
        - 8 * a**3 * al * be * alp**2
        - 3 * a**2 * be * alp * alpp
        - 2 * a**2 * al**2 * be * alp * alpp
        - 3 * a**2 * be**3 * alp * alpp
        + 3 * a**3 * be * alpp
        + 3 * a**3 * al**2 * be * alpp
    )
