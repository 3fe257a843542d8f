"""The group ring Z[X] and Euler characteristics.

A :class:`Character` is a finite formal sum of weights with integer
coefficients.  Euler characteristics ``chi(mu)`` are computed by exact long
division of alternating sums, ``A(mu + rho) / A(rho)``; characters of
W-invariant elements can be rewritten in the orbit-sum basis ``s(mu)`` or the
Weyl-character basis ``chi(mu)``.
"""

from __future__ import annotations

import heapq
from collections import defaultdict
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator, Mapping

from .rootdata import (
    RootDatum,
    Weight,
    apply_weyl,
    dominant_representative,
    simple_reflection,
    weyl_orbit,
)


class CharacterError(ValueError):
    pass


class NotInvariantError(CharacterError):
    """Raised when a W-invariant character is required.  ``orbit`` names a
    dominant weight whose orbit carries unequal coefficients."""

    def __init__(self, msg: str, orbit: Weight | None = None):
        super().__init__(msg)
        self.orbit = orbit


class DivisionError(CharacterError):
    """Exact division left a nonzero remainder."""

    def __init__(self, msg: str, remainder: "Character | None" = None):
        super().__init__(msg)
        self.remainder = remainder


class Character:
    """Element of Z[X]: a sparse map weight -> nonzero integer.

    Treat instances as immutable; arithmetic returns new characters.
    """

    __slots__ = ("datum", "_terms")

    def __init__(self, datum: RootDatum, terms: Mapping[Weight, int] | Iterable = ()):
        self.datum = datum
        if isinstance(terms, Mapping):
            items = terms.items()
        else:
            items = terms
        acc: dict[Weight, int] = {}
        for lam, c in items:
            lam = tuple(lam)
            if len(lam) != datum.rank:
                raise CharacterError(f"weight {lam} does not have rank {datum.rank}")
            acc[lam] = acc.get(lam, 0) + int(c)
        self._terms = {k: v for k, v in acc.items() if v}

    @classmethod
    def _raw(cls, datum: RootDatum, terms: dict[Weight, int]) -> "Character":
        # trusted constructor: terms already clean
        obj = cls.__new__(cls)
        obj.datum = datum
        obj._terms = terms
        return obj

    @classmethod
    def zero(cls, datum: RootDatum) -> "Character":
        return cls._raw(datum, {})

    @classmethod
    def e(cls, datum: RootDatum, lam: Iterable[int], coeff: int = 1) -> "Character":
        return cls(datum, {tuple(lam): coeff})

    # -- mapping-ish access ----------------------------------------------

    @property
    def terms(self) -> Mapping[Weight, int]:
        return self._terms

    def coeff(self, lam: Iterable[int]) -> int:
        return self._terms.get(tuple(lam), 0)

    def __getitem__(self, lam) -> int:
        return self.coeff(lam)

    def __iter__(self) -> Iterator[Weight]:
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def items(self):
        return self._terms.items()

    def __bool__(self) -> bool:
        return bool(self._terms)

    @property
    def dim(self) -> int:
        """Sum of coefficients (the dimension, for module characters)."""
        return sum(self._terms.values())

    def sorted_terms(self) -> list[tuple[Weight, int]]:
        key = self.datum.sort_key
        return sorted(self._terms.items(), key=lambda kv: key(kv[0]), reverse=True)

    # -- arithmetic -------------------------------------------------------

    def _check(self, other: "Character") -> None:
        if other.datum != self.datum:
            raise CharacterError(
                f"datum mismatch: {self.datum.type_label} vs {other.datum.type_label}"
            )

    def __add__(self, other: "Character") -> "Character":
        self._check(other)
        out = dict(self._terms)
        for lam, c in other._terms.items():
            v = out.get(lam, 0) + c
            if v:
                out[lam] = v
            else:
                del out[lam]
        return Character._raw(self.datum, out)

    def __neg__(self) -> "Character":
        return Character._raw(self.datum, {k: -v for k, v in self._terms.items()})

    def __sub__(self, other: "Character") -> "Character":
        return self + (-other)

    def __mul__(self, other) -> "Character":
        if isinstance(other, int):
            if other == 0:
                return Character.zero(self.datum)
            return Character._raw(self.datum, {k: other * v for k, v in self._terms.items()})
        return multiply(self, other)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, Character):
            return NotImplemented
        return self.datum == other.datum and self._terms == other._terms

    def __repr__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for lam, c in self.sorted_terms():
            w = ",".join(map(str, lam))
            parts.append(f"{c}*e({w})" if c != 1 else f"e({w})")
        return " + ".join(parts)


def multiply(c1: Character, c2: Character) -> Character:
    c1._check(c2)
    if len(c1) < len(c2):
        c1, c2 = c2, c1
    out: dict[Weight, int] = defaultdict(int)
    big = list(c1._terms.items())
    for mu, b in c2._terms.items():
        if len(mu) == 1:
            m0 = mu[0]
            for lam, a in big:
                out[(lam[0] + m0,)] += a * b
        elif len(mu) == 2:
            m0, m1 = mu
            for lam, a in big:
                out[(lam[0] + m0, lam[1] + m1)] += a * b
        else:
            for lam, a in big:
                out[tuple(x + y for x, y in zip(lam, mu))] += a * b
    return Character._raw(c1.datum, {k: v for k, v in out.items() if v})


def dual(c: Character) -> Character:
    return Character._raw(c.datum, {tuple(-x for x in k): v for k, v in c.items()})


def frobenius_twist(c: Character, p: int) -> Character:
    if p < 2:
        raise CharacterError("p must be at least 2")
    return Character._raw(c.datum, {tuple(p * x for x in k): v for k, v in c.items()})


def pi_p(c: Character, p: int) -> Character:
    """Keep the weights lying in pX and divide them by p."""
    if p < 2:
        raise CharacterError("p must be at least 2")
    return Character._raw(
        c.datum,
        {tuple(x // p for x in k): v for k, v in c.items() if all(x % p == 0 for x in k)},
    )


def relabel(c: Character, w_index: int) -> Character:
    """Apply a Weyl group element to every weight."""
    return Character._raw(c.datum, {apply_weyl(c.datum, w_index, k): v for k, v in c.items()})


def minus_w0(c: Character) -> Character:
    """Image under the automorphism ``lam -> -w0 lam``."""
    return dual(relabel(c, c.datum.w0))


def orbit_sum(datum: RootDatum, mu: Weight) -> Character:
    mu = datum.check_weight(mu)
    if not datum.is_dominant(mu):
        raise CharacterError(f"orbit_sum needs a dominant weight, got {mu}")
    return Character._raw(datum, {nu: 1 for nu in weyl_orbit(datum, mu)})


def find_asymmetry(c: Character) -> Weight | None:
    """Return a weight whose W-orbit carries unequal coefficients, or None."""
    datum = c.datum
    terms = c._terms
    for lam, v in terms.items():
        for i in range(datum.rank):
            if lam[i] and terms.get(simple_reflection(datum, i, lam), 0) != v:
                return lam
    return None


def is_weyl_invariant(c: Character) -> bool:
    return find_asymmetry(c) is None


def _require_invariant(c: Character) -> None:
    bad = find_asymmetry(c)
    if bad is not None:
        dom, _ = dominant_representative(c.datum, bad)
        raise NotInvariantError(
            f"character is not W-invariant: coefficients differ on the orbit of {dom}",
            orbit=dom,
        )


def alternating_sum(datum: RootDatum, mu: Weight) -> Character:
    """Signed sum over all of W (no deduplication): sum of (-1)^l(w) e(w mu)."""
    mu = datum.check_weight(mu)
    out: dict[Weight, int] = defaultdict(int)
    for k, m in enumerate(datum.weyl_elements):
        out[apply_weyl(datum, k, mu)] += datum.signs[k]
    return Character._raw(datum, {k: v for k, v in out.items() if v})


def is_singular(datum: RootDatum, nu: Weight) -> bool:
    """True when ``nu`` lies on a reflecting hyperplane (nontrivial stabilizer)."""
    return any(datum.pairing(nu, k) == 0 for k in range(len(datum.positive_roots)))


def dot_normalize(datum: RootDatum, mu: Weight) -> tuple[int, Weight] | None:
    """Move ``mu`` into ``X+`` by the dot action.

    Returns ``(sign, w . mu)`` with ``w . mu`` dominant and sign ``(-1)^l(w)``,
    or None when ``mu + rho`` is singular.
    """
    shifted = tuple(x + 1 for x in mu)
    sign = 1
    while True:
        i = next((j for j, x in enumerate(shifted) if x <= 0), None)
        if i is None:
            break
        if shifted[i] == 0:
            return None
        shifted = simple_reflection(datum, i, shifted)
        sign = -sign
    return sign, tuple(x - 1 for x in shifted)


def divide_exact(num: Character, den: Character) -> Character:
    """Exact quotient in Z[X]; raises DivisionError on a nonzero remainder.

    Long division with respect to the total order ``datum.sort_key``, which
    is translation invariant, so leading terms multiply.  Any true quotient
    term lies above ``min(num) - min(den)``; once the next candidate falls
    below that floor the division cannot succeed.
    """
    num._check(den)
    datum = num.datum
    if not den:
        raise DivisionError("division by zero")
    if not num:
        return Character.zero(datum)
    key = datum.sort_key
    lead = max(den._terms, key=key)
    lead_c = den._terms[lead]
    floor = key(tuple(a - b for a, b in zip(min(num._terms, key=key), min(den._terms, key=key))))
    den_items = list(den._terms.items())

    rem = dict(num._terms)
    heap = [_neg_key(datum, lam) for lam in rem]
    heapq.heapify(heap)
    quotient: dict[Weight, int] = {}
    while heap:
        top = heapq.heappop(heap)[2]
        c = rem.get(top)
        if not c:
            continue
        shift = tuple(a - b for a, b in zip(top, lead))
        q, r = divmod(c, lead_c)
        if r or key(shift) < floor:
            raise DivisionError(
                f"not divisible: remainder survives at {top}",
                remainder=Character(datum, rem),
            )
        quotient[shift] = q
        for lam, d in den_items:
            nu = tuple(a + b for a, b in zip(lam, shift))
            v = rem.get(nu, 0) - q * d
            if v:
                if nu not in rem:
                    heapq.heappush(heap, _neg_key(datum, nu))
                rem[nu] = v
            else:
                rem.pop(nu, None)
    return Character._raw(datum, quotient)


def _neg_key(datum: RootDatum, lam: Weight):
    return (-datum.level(lam), tuple(-x for x in lam), lam)


@lru_cache(maxsize=4096)
def _dominant_chi(datum: RootDatum, nu: Weight) -> Character:
    shifted = tuple(x + 1 for x in nu)
    return divide_exact(alternating_sum(datum, shifted), alternating_sum(datum, datum.rho))


def chi(datum: RootDatum, mu: Weight) -> Character:
    """Euler characteristic chi(mu) for any weight mu.

    Zero when mu + rho is singular; otherwise the signed Weyl character of
    the dominant weight in the dot-orbit of mu.
    """
    mu = datum.check_weight(mu)
    norm = dot_normalize(datum, mu)
    if norm is None:
        return Character.zero(datum)
    sign, nu = norm
    try:
        base = _dominant_chi(datum, nu)
    except DivisionError as exc:  # pragma: no cover - would be a bug
        raise RuntimeError(f"A(nu+rho)/A(rho) inexact for nu={nu}") from exc
    return base if sign == 1 else -base


def brauer_product(datum: RootDatum, lam: Weight, mu: Weight) -> list[Weight]:
    """Arguments ``lam + gamma`` (gamma in W mu) with chi(lam) s(mu) = sum chi(lam + gamma)."""
    lam = datum.check_weight(lam)
    mu = datum.check_weight(mu)
    if not datum.is_dominant(mu):
        raise CharacterError(f"brauer_product needs dominant mu, got {mu}")
    return sorted(
        (tuple(a + b for a, b in zip(lam, g)) for g in weyl_orbit(datum, mu)),
        key=datum.sort_key,
        reverse=True,
    )


@dataclass(frozen=True)
class OrbitDecomposition:
    """Coefficients ``c_mu`` in ``sum c_mu s(mu)`` over dominant mu."""

    datum: RootDatum
    coeffs: dict = field(default_factory=dict)

    def reconstruct(self) -> Character:
        out = Character.zero(self.datum)
        for mu, c in self.coeffs.items():
            out = out + c * orbit_sum(self.datum, mu)
        return out

    def __getitem__(self, mu) -> int:
        return self.coeffs.get(tuple(mu), 0)

    def sorted_items(self) -> list[tuple[Weight, int]]:
        return sorted(self.coeffs.items(), key=lambda kv: self.datum.sort_key(kv[0]), reverse=True)


@dataclass(frozen=True)
class WeylDecomposition:
    """Coefficients ``c_mu`` in ``sum c_mu chi(mu)`` over dominant mu."""

    datum: RootDatum
    coeffs: dict = field(default_factory=dict)

    def reconstruct(self) -> Character:
        out = Character.zero(self.datum)
        for mu, c in self.coeffs.items():
            out = out + c * chi(self.datum, mu)
        return out

    def __getitem__(self, mu) -> int:
        return self.coeffs.get(tuple(mu), 0)

    def sorted_items(self) -> list[tuple[Weight, int]]:
        return sorted(self.coeffs.items(), key=lambda kv: self.datum.sort_key(kv[0]), reverse=True)

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self.coeffs.values())


def decompose_orbit_sums(c: Character) -> OrbitDecomposition:
    """Write a W-invariant character in the orbit-sum basis.

    Dominant weights are taken from the top of the order (level, then lex);
    the basis is unique so the order only fixes the path.
    """
    _require_invariant(c)
    datum = c.datum
    rem = dict(c._terms)
    coeffs = {}
    for mu in sorted((lam for lam in c._terms if datum.is_dominant(lam)),
                     key=datum.sort_key, reverse=True):
        m = rem.get(mu, 0)
        if not m:
            continue
        coeffs[mu] = m
        for nu in weyl_orbit(datum, mu):
            v = rem.get(nu, 0) - m
            if v:
                rem[nu] = v
            else:
                rem.pop(nu, None)
    if rem:  # pragma: no cover - excluded by the invariance check
        raise NotInvariantError("orbit decomposition left a remainder")
    return OrbitDecomposition(datum, coeffs)


def decompose_weyl_basis(c: Character) -> WeylDecomposition:
    """Write a W-invariant character as an integer combination of chi(mu), mu dominant."""
    _require_invariant(c)
    datum = c.datum
    rem = dict(c._terms)
    heap = [_neg_key(datum, lam) for lam in rem if datum.is_dominant(lam)]
    heapq.heapify(heap)
    coeffs: dict[Weight, int] = {}
    while heap:
        mu = heapq.heappop(heap)[2]
        m = rem.get(mu, 0)
        if not m:
            continue
        coeffs[mu] = coeffs.get(mu, 0) + m
        for nu, d in _dominant_chi(datum, mu).items():
            v = rem.get(nu, 0) - m * d
            if v:
                if nu not in rem and datum.is_dominant(nu):
                    heapq.heappush(heap, _neg_key(datum, nu))
                rem[nu] = v
            else:
                rem.pop(nu, None)
    if rem:  # pragma: no cover - excluded by the invariance check
        raise NotInvariantError("Weyl decomposition left a remainder")
    return WeylDecomposition(datum, {k: v for k, v in coeffs.items() if v})


def weyl_combination(datum: RootDatum, args: Iterable[tuple[Weight, int]]) -> WeylDecomposition:
    """Collect ``sum c * chi(nu)`` over arbitrary nu into the dominant Weyl basis.

    Uses chi(w . nu) = (-1)^l(w) chi(nu) instead of expanding characters.
    """
    coeffs: dict[Weight, int] = defaultdict(int)
    for nu, c in args:
        norm = dot_normalize(datum, nu)
        if norm is None:
            continue
        sign, dom = norm
        coeffs[dom] += sign * c
    return WeylDecomposition(datum, {k: v for k, v in coeffs.items() if v})
