"""Steinberg quotients and the checks built on them.

For a module M that is projective over G_1 T, ``ch(M) / chi((p-1) rho)`` is
an honest element of Z[X] whose coefficients are baby Verma multiplicities.
For tilting modules ``T((p-1) rho + lam)`` these are the b-coefficients,
for G_1 T-PIMs the a-coefficients.
"""

from __future__ import annotations

import itertools
from collections import defaultdict
from dataclasses import dataclass, field

from .charring import (
    Character,
    CharacterError,
    DivisionError,
    OrbitDecomposition,
    WeylDecomposition,
    chi,
    decompose_orbit_sums,
    decompose_weyl_basis,
    divide_exact,
    find_asymmetry,
    minus_w0,
    multiply,
    pi_p,
    relabel,
    weyl_combination,
)
from .linkage import linkage_down_set, up_arrow
from .rootdata import RootDatum, Weight, weyl_orbit

KINDS = ("tilting", "pim", "raw")


class NotDivisibleError(DivisionError):
    pass


class QuotientError(ValueError):
    pass


def steinberg_chi(datum: RootDatum, p: int) -> Character:
    return chi(datum, tuple((p - 1) * x for x in datum.rho))


def steinberg_quotient(datum: RootDatum, p: int, ch_m: Character) -> Character:
    """Exact quotient ``ch_m / chi((p-1) rho)``.

    Raises NotDivisibleError (carrying the surviving remainder) when ch_m
    is not a multiple of the Steinberg character.
    """
    if not ch_m:
        raise QuotientError("cannot take the Steinberg quotient of the zero character")
    try:
        return divide_exact(ch_m, steinberg_chi(datum, p))
    except DivisionError as exc:
        raise NotDivisibleError(
            f"character is not divisible by chi((p-1)rho) for p={p}: {exc}",
            remainder=exc.remainder,
        ) from None


def baby_verma_multiplicities(datum: RootDatum, p: int, ch_m: Character) -> dict[Weight, int]:
    """Entry mu is the multiplicity of the baby Verma factor with highest weight mu + (p-1) rho."""
    return dict(steinberg_quotient(datum, p, ch_m).items())


@dataclass(frozen=True)
class SteinbergQuotient:
    datum: RootDatum
    p: int
    lam: Weight
    quotient: Character
    orbit_coeffs: OrbitDecomposition
    kind: str = "tilting"

    def coeff(self, mu) -> int:
        return self.orbit_coeffs[mu]


def make_quotient(datum: RootDatum, p: int, ch_m: Character, lam: Weight | None = None,
                  kind: str = "tilting") -> SteinbergQuotient:
    """Divide ``ch_m`` and package the result with its orbit coefficients.

    ``lam`` defaults to the highest weight of ch_m minus (p-1) rho.  The
    quotient must be W-invariant with nonnegative orbit coefficients and
    coefficient 1 at lam.
    """
    if kind not in KINDS:
        raise QuotientError(f"unknown module kind {kind!r}")
    q = steinberg_quotient(datum, p, ch_m)
    if lam is None:
        top = max(ch_m.terms, key=datum.sort_key)
        lam = tuple(x - (p - 1) for x in top)
    lam = datum.check_weight(lam)
    bad = find_asymmetry(q)
    if bad is not None:
        raise QuotientError(f"quotient is not W-invariant near weight {bad}")
    orbits = decompose_orbit_sums(q)
    neg = {mu: c for mu, c in orbits.coeffs.items() if c < 0}
    if neg:
        raise QuotientError(f"negative orbit coefficients {neg}")
    if orbits[lam] != 1:
        raise QuotientError(f"coefficient of s{lam} is {orbits[lam]}, expected 1")
    return SteinbergQuotient(datum, p, lam, q, orbits, kind)


def quotient_from_orbits(datum: RootDatum, p: int, lam: Weight, coeffs: dict,
                         kind: str = "tilting") -> SteinbergQuotient:
    """Build a SteinbergQuotient directly from stated orbit coefficients."""
    orbits = OrbitDecomposition(datum, {tuple(k): v for k, v in coeffs.items() if v})
    return SteinbergQuotient(datum, p, tuple(lam), orbits.reconstruct(), orbits, kind)


@dataclass
class TheoremReport:
    support_ok: bool
    monotonicity_ok: bool
    predicted_support: list
    violations: list = field(default_factory=list)
    kind: str = "tilting"

    @property
    def ok(self) -> bool:
        return self.support_ok and self.monotonicity_ok

    @property
    def status(self) -> str:
        if self.kind == "pim":
            return "conjecture-consistent" if self.ok else "CONJECTURE-VIOLATION"
        return "theorem-consistent" if self.ok else "THEOREM-VIOLATION"


def verify_theorem(datum: RootDatum, p: int, sq: SteinbergQuotient) -> TheoremReport:
    """Compare orbit coefficients against the linkage prediction.

    Support: ``b_mu > 0`` exactly for dominant mu with ``mu - rho ^ lam - rho``.
    Monotonicity: ``b_mu >= b_mu'`` whenever ``mu - rho ^ mu' - rho`` inside
    that set.  For PIM data the same checks are a conjecture, and the report
    status says so.
    """
    predicted = linkage_down_set(datum, p, sq.lam)
    actual = {mu for mu, c in sq.orbit_coeffs.coeffs.items() if c > 0}
    violations = []
    for mu in sorted(actual ^ set(predicted), key=datum.sort_key, reverse=True):
        violations.append(("support", mu, sq.coeff(mu)))
    support_ok = not violations
    mono_ok = True
    for i, mu in enumerate(predicted):
        for mu2 in predicted[:i]:
            # predicted is sorted high to low, so only mu2 above mu can link upward
            if up_arrow(datum, p, tuple(x - 1 for x in mu), tuple(x - 1 for x in mu2)):
                if sq.coeff(mu) < sq.coeff(mu2):
                    mono_ok = False
                    violations.append(("monotonicity", mu, mu2, sq.coeff(mu), sq.coeff(mu2)))
    return TheoremReport(support_ok, mono_ok, predicted, violations, sq.kind)


def _check_pair(sq1: SteinbergQuotient, sq2: SteinbergQuotient) -> None:
    if sq1.datum != sq2.datum or sq1.p != sq2.p:
        raise QuotientError("quotients come from different groups or primes")


def hom_character(datum: RootDatum, p: int, sq1: SteinbergQuotient,
                  sq2: SteinbergQuotient) -> Character:
    """``pi_p(q1 q2)``: the character of the untwisted G_1-Hom space."""
    _check_pair(sq1, sq2)
    return pi_p(multiply(sq1.quotient, sq2.quotient), p)


def hom_character_by_pairing(datum: RootDatum, p: int, sq1: SteinbergQuotient,
                             sq2: SteinbergQuotient) -> Character:
    """Same character, summed over pairs of baby Verma factors.

    The source module of the Hom space is indexed by ``-w0 lam``; its
    factors are ``gamma`` over the weights of the ``-w0``-image of sq1's
    quotient, the target's are ``sigma`` over sq2's quotient, and
    each pair contributes ``e((sigma - gamma)/p)`` when sigma - gamma is in pX.
    """
    _check_pair(sq1, sq2)
    source = dict(minus_w0(sq1.quotient).items())
    target = dict(sq2.quotient.items())
    out: dict[Weight, int] = defaultdict(int)
    for gamma, c in source.items():
        for sigma, d in target.items():
            diff = [s - g for s, g in zip(sigma, gamma)]
            if all(x % p == 0 for x in diff):
                out[tuple(x // p for x in diff)] += c * d
    return Character(datum, out)


def is_plausible_module_character(c: Character) -> bool:
    """W-invariant with nonnegative Weyl-basis coefficients."""
    if find_asymmetry(c) is not None:
        return False
    return decompose_weyl_basis(c).is_nonnegative()


def is_plausible_tilting_character(c: Character) -> bool:
    """Necessary (not sufficient) condition for ``c`` to be a tilting character.

    Requires W-invariance, nonnegative Weyl-basis coefficients and
    invariance under the ``-w0`` relabeling of the dual.
    """
    if not is_plausible_module_character(c):
        return False
    # dual(c) relabeled by -w0 is c relabeled by w0
    return relabel(c, c.datum.w0) == c


def twisted_tensor_weyl_coeffs(datum: RootDatum, p: int, sq: SteinbergQuotient,
                               sigma: Weight) -> WeylDecomposition:
    """Weyl-basis coefficients of ``ch(T((p-1)rho + lam) (x) nabla(sigma)^(1))``.

    Expands as ``sum_mu b_mu sum_{gamma in W mu} chi((p-1)rho + p sigma + gamma)``
    and moves each argument into X+ with the dot-action sign rule.
    """
    sigma = datum.check_weight(sigma)
    if not datum.is_dominant(sigma):
        raise QuotientError(f"sigma must be dominant, got {sigma}")
    base = tuple((p - 1) * r + p * s for r, s in zip(datum.rho, sigma))
    args = []
    for mu, b in sq.orbit_coeffs.coeffs.items():
        for gamma in weyl_orbit(datum, mu):
            args.append((tuple(x + g for x, g in zip(base, gamma)), b))
    return weyl_combination(datum, args)


@dataclass
class ComparisonReport:
    equal: bool
    dominated: bool
    rows: list  # (mu, a_mu, b_mu)
    strict: list  # mu with a_mu < b_mu
    violations: list  # mu with a_mu > b_mu


def compare_pim_vs_tilting(datum: RootDatum, p: int, sq_pim: SteinbergQuotient,
                           sq_tilt: SteinbergQuotient) -> ComparisonReport:
    """Check ``a_mu <= b_mu`` for every mu and report where equality fails."""
    _check_pair(sq_pim, sq_tilt)
    if sq_pim.lam != sq_tilt.lam:
        raise QuotientError(f"different highest weights {sq_pim.lam} and {sq_tilt.lam}")
    support = set(sq_pim.orbit_coeffs.coeffs) | set(sq_tilt.orbit_coeffs.coeffs)
    rows = []
    for mu in sorted(support, key=datum.sort_key, reverse=True):
        rows.append((mu, sq_pim.coeff(mu), sq_tilt.coeff(mu)))
    strict = [mu for mu, a, b in rows if a < b]
    bad = [mu for mu, a, b in rows if a > b]
    return ComparisonReport(not strict and not bad, not bad, rows, strict, bad)


def tilting_lower_bounds(datum: RootDatum, p: int, sq_pim: SteinbergQuotient) -> dict[Weight, int]:
    """Lower bounds on the b-coefficients implied by PIM data alone.

    Combines ``a_mu <= b_mu``, ``b_mu > 0`` on the linkage-predicted support
    and monotonicity down the linkage order.  No upper bounds are implied.
    """
    predicted = linkage_down_set(datum, p, sq_pim.lam)
    bounds: dict[Weight, int] = {}
    for i, mu in enumerate(predicted):
        lb = max(sq_pim.coeff(mu), 1)
        for mu2 in predicted[:i]:
            if up_arrow(datum, p, tuple(x - 1 for x in mu), tuple(x - 1 for x in mu2)):
                lb = max(lb, bounds[mu2])
        bounds[mu] = lb
    return bounds


def restricted_weights(datum: RootDatum, p: int):
    for lam in itertools.product(range(p), repeat=datum.rank):
        yield tuple(lam)


__all__ = [
    "CharacterError",
    "ComparisonReport",
    "NotDivisibleError",
    "QuotientError",
    "SteinbergQuotient",
    "TheoremReport",
    "baby_verma_multiplicities",
    "compare_pim_vs_tilting",
    "hom_character",
    "hom_character_by_pairing",
    "is_plausible_module_character",
    "is_plausible_tilting_character",
    "make_quotient",
    "quotient_from_orbits",
    "restricted_weights",
    "steinberg_chi",
    "tilting_lower_bounds",
    "steinberg_quotient",
    "twisted_tensor_weyl_coeffs",
    "verify_theorem",
]
