"""Dot action of the affine Weyl group W_p and the strong linkage order.

``lam ^ mu`` (written ``up_arrow(lam, mu)``) holds when a sequence of affine
reflections ``s_{alpha, np}`` carries lam to mu through weights increasing in
the dominance order.  Searches run over the finite dominance interval
``[lam, mu]``.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from typing import Callable

from .rootdata import RootDatum, Weight, apply_weyl, dominance_leq

DEFAULT_SEARCH_CAP = 200_000


class LinkageError(ValueError):
    pass


class SearchCapExceeded(LinkageError):
    pass


@dataclass(frozen=True)
class AffineReflection:
    """``s_{alpha, n p}``: ``alpha`` indexes ``datum.positive_roots``."""

    alpha: int
    n: int

    def label(self, p: int) -> str:
        return f"s(a{self.alpha},{self.n * p})"


@dataclass
class LinkageChain:
    weights: list = field(default_factory=list)
    reflections: list = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.reflections)

    def format(self, p: int) -> str:
        def w(x):
            return ",".join(map(str, x))

        if not self.weights:
            return "<empty>"
        out = w(self.weights[0])
        for r, nu in zip(self.reflections, self.weights[1:]):
            out += f" --{r.label(p)}--> {w(nu)}"
        return out


def dot_apply(datum: RootDatum, p: int, r: AffineReflection, lam: Weight) -> Weight:
    """``s_{alpha,np} . lam = s_alpha(lam + rho) - rho + n p alpha``."""
    alpha = datum.positive_roots[r.alpha]
    m = datum.pairing(tuple(x + 1 for x in lam), r.alpha)
    k = r.n * p - m
    return tuple(x + k * a for x, a in zip(lam, alpha))


def _successors(datum: RootDatum, p: int, nu: Weight, mu: Weight):
    """Yield ``(reflection, nu')`` with ``nu < nu' <= mu``.

    ``s_{alpha,np} . nu = nu + (np - m) alpha`` with ``m = <nu + rho, alpha^vee>``;
    the step k = np - m must be positive and at most the largest k with
    ``nu + k alpha <= mu``.
    """
    gap = datum.root_coords(tuple(b - a for a, b in zip(nu, mu)))
    if any(g < 0 for g in gap):
        return
    shifted = tuple(x + 1 for x in nu)
    for idx, (alpha, coords) in enumerate(zip(datum.positive_roots, datum.positive_root_coords)):
        kmax = min(g // c for g, c in zip(gap, coords) if c > 0)
        if kmax <= 0:
            continue
        m = datum.pairing(shifted, idx)
        # m < np <= m + kmax
        for n in range(m // p + 1, (m + kmax) // p + 1):
            k = n * p - m
            yield AffineReflection(idx, n), tuple(x + k * a for x, a in zip(nu, alpha))


def _bfs(datum, p, lam, mu, allowed: Callable[[Weight], bool] | None, cap: int):
    lam = datum.check_weight(lam)
    mu = datum.check_weight(mu)
    if lam == mu:
        return LinkageChain([lam], [])
    if not dominance_leq(datum, lam, mu):
        return None
    parent: dict[Weight, tuple[Weight, AffineReflection] | None] = {lam: None}
    queue = deque([lam])
    while queue:
        nu = queue.popleft()
        for r, nxt in _successors(datum, p, nu, mu):
            if nxt in parent or (allowed is not None and not allowed(nxt)):
                continue
            parent[nxt] = (nu, r)
            if nxt == mu:
                weights, refl = [mu], []
                cur = mu
                while parent[cur] is not None:
                    prev, rr = parent[cur]
                    weights.append(prev)
                    refl.append(rr)
                    cur = prev
                return LinkageChain(weights[::-1], refl[::-1])
            if len(parent) > cap:
                raise SearchCapExceeded(
                    f"linkage search from {lam} to {mu} visited more than {cap} weights"
                )
            queue.append(nxt)
    return None


def linkage_chain(datum: RootDatum, p: int, lam: Weight, mu: Weight,
                  cap: int = DEFAULT_SEARCH_CAP) -> LinkageChain | None:
    """Shortest witness chain for ``lam ^ mu``, or None."""
    return _bfs(datum, p, lam, mu, None, cap)


def up_arrow(datum: RootDatum, p: int, lam: Weight, mu: Weight,
             cap: int = DEFAULT_SEARCH_CAP) -> bool:
    return _bfs(datum, p, lam, mu, None, cap) is not None


def _in_shifted_dominant(nu: Weight) -> bool:
    return all(x >= -1 for x in nu)


def dominant_chain(datum: RootDatum, p: int, lam: Weight, mu: Weight,
                   cap: int = DEFAULT_SEARCH_CAP) -> LinkageChain | None:
    """A chain for ``lam ^ mu`` staying inside ``X+ - rho``, or None if there is none."""
    lam = datum.check_weight(lam)
    mu = datum.check_weight(mu)
    if not (_in_shifted_dominant(lam) and _in_shifted_dominant(mu)):
        raise LinkageError(f"dominant_chain needs both weights in X+ - rho, got {lam}, {mu}")
    return _bfs(datum, p, lam, mu, _in_shifted_dominant, cap)


def dominant_weights_below(datum: RootDatum, lam: Weight) -> list[Weight]:
    """Dominant mu with mu <= lam (same coset); they all satisfy w0 lam <= mu."""
    lam = datum.check_weight(lam)
    if not datum.is_dominant(lam):
        raise LinkageError(f"expected a dominant weight, got {lam}")
    bottom = apply_weyl(datum, datum.w0, lam)
    span = datum.root_coords(tuple(a - b for a, b in zip(lam, bottom)))
    out = []
    roots = datum.simple_roots
    for xs in itertools.product(*(range(s + 1) for s in span)):
        mu = list(lam)
        for x, alpha in zip(xs, roots):
            if x:
                for j, a in enumerate(alpha):
                    mu[j] -= x * a
        if all(v >= 0 for v in mu):
            out.append(tuple(mu))
    out.sort(key=datum.sort_key, reverse=True)
    return out


def linkage_down_set(datum: RootDatum, p: int, lam: Weight,
                     cap: int = DEFAULT_SEARCH_CAP) -> list[Weight]:
    """Dominant mu <= lam with ``mu - rho ^ lam - rho``, highest first."""
    top = tuple(x - 1 for x in lam)
    return [
        mu for mu in dominant_weights_below(datum, lam)
        if up_arrow(datum, p, tuple(x - 1 for x in mu), top, cap)
    ]
