"""Root data for simple root systems.

Weights are plain tuples of integers giving coefficients of the fundamental
weights.  Roots live in the same basis: the simple root ``alpha_j`` is the
j-th column of the Cartan matrix, whose entries are
``a_ij = <alpha_j, alpha_i^vee>``.  Numbering follows Bourbaki (see
CONVENTIONS.md at the repository root).
"""

from __future__ import annotations

from collections import deque
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Sequence

Weight = tuple[int, ...]
Matrix = tuple[tuple[int, ...], ...]

DEFAULT_WEYL_CAP = 5000


class RootDataError(ValueError):
    pass


class UnsupportedTypeError(RootDataError):
    pass


class WeylGroupTooLarge(RootDataError):
    pass


def known_weyl_order(kind: str, rank: int) -> int | None:
    if kind == "A":
        return factorial(rank + 1)
    if kind in "BC":
        return 2**rank * factorial(rank)
    if kind == "D":
        return 2 ** (rank - 1) * factorial(rank)
    return {("E", 6): 51840, ("E", 7): 2903040, ("E", 8): 696729600,
            ("F", 4): 1152, ("G", 2): 12}.get((kind, rank))


def cartan_matrix(kind: str, rank: int) -> Matrix:
    """Cartan matrix ``a_ij = <alpha_j, alpha_i^vee>`` in Bourbaki numbering."""
    kind = kind.upper()
    n = rank
    valid = {
        "A": n >= 1, "B": n >= 2, "C": n >= 2, "D": n >= 4,
        "E": n in (6, 7, 8), "F": n == 4, "G": n == 2,
    }
    if not valid.get(kind, False):
        raise UnsupportedTypeError(f"unsupported root system {kind}{rank}")
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def link(i, j, aij=-1, aji=-1):
        a[i][j] = aij
        a[j][i] = aji

    if kind in "ABC":
        for i in range(n - 1):
            link(i, i + 1)
        if kind == "B":
            # alpha_n short: <alpha_{n-1}, alpha_n^vee> = -2
            a[n - 1][n - 2] = -2
        elif kind == "C":
            a[n - 2][n - 1] = -2
    elif kind == "D":
        for i in range(n - 2):
            link(i, i + 1)
        link(n - 3, n - 1)
    elif kind == "E":
        link(0, 2)
        link(1, 3)
        for i in range(2, n - 1):
            link(i, i + 1)
    elif kind == "F":
        link(0, 1)
        link(2, 3)
        # alpha_1, alpha_2 long; alpha_3, alpha_4 short
        a[1][2] = -1
        a[2][1] = -2
    elif kind == "G":
        # alpha_1 short, alpha_2 long
        a[0][1] = -3
        a[1][0] = -1
    return tuple(tuple(row) for row in a)


def _mat_vec(m: Matrix, v: Sequence[int]) -> Weight:
    return tuple(sum(mij * vj for mij, vj in zip(row, v)) for row in m)


def _mat_mul(a: Matrix, b: Matrix) -> Matrix:
    cols = list(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in cols) for row in a)


def _inverse(m: Matrix) -> list[list[Fraction]]:
    n = len(m)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(m)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        pv = aug[col][col]
        aug[col] = [x / pv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def _determinant(m: Matrix) -> int:
    n = len(m)
    a = [[Fraction(x) for x in row] for row in m]
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            return 0
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det
        det *= a[col][col]
        for r in range(col + 1, n):
            f = a[r][col] / a[col][col]
            a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return int(det)


class RootDatum:
    """Immutable root-system context.

    Holds the Cartan matrix, positive roots and coroots, the Weyl group as an
    explicit list of integer matrices acting on fundamental-weight
    coordinates (with lengths), rho, the longest element and a few derived
    constants.  Instances are hashable and compare by Cartan matrix.
    """

    def __init__(self, type_label: str, cartan: Matrix, weyl_cap: int = DEFAULT_WEYL_CAP):
        self.type_label = type_label
        self.cartan = tuple(tuple(int(x) for x in row) for row in cartan)
        self.rank = n = len(self.cartan)
        for i, row in enumerate(self.cartan):
            if len(row) != n or row[i] != 2 or any(row[j] > 0 for j in range(n) if j != i):
                raise RootDataError(f"not a Cartan matrix: {self.cartan}")

        self.simple_roots: tuple[Weight, ...] = tuple(
            tuple(self.cartan[i][j] for i in range(n)) for j in range(n)
        )
        self.det = _determinant(self.cartan)
        if self.det <= 0:
            raise RootDataError(f"Cartan matrix is not of finite type: {self.cartan}")
        inv = _inverse(self.cartan)
        # integer adjugate: root coordinates are adj . weight / det
        self._adj = tuple(tuple(int(x * self.det) for x in row) for row in inv)

        self.generators: tuple[Matrix, ...] = tuple(self._reflection_matrix(i) for i in range(n))
        self._enumerate_weyl(weyl_cap)
        self._build_roots()

        self.rho: Weight = (1,) * n
        self.w0 = max(range(len(self.weyl_elements)), key=self.lengths.__getitem__)
        self.coxeter_number = 2 * len(self.positive_roots) // n
        # pairing with 2*rho^vee: a linear form positive on every positive root
        self._two_rho_check = tuple(sum(col) for col in zip(*self.positive_coroots))

    # -- construction -----------------------------------------------------

    def _reflection_matrix(self, i: int) -> Matrix:
        n = self.rank
        alpha = self.simple_roots[i]
        return tuple(
            tuple(int(r == c) - (alpha[r] if c == i else 0) for c in range(n))
            for r in range(n)
        )

    def _enumerate_weyl(self, cap: int) -> None:
        n = self.rank
        ident = tuple(tuple(int(r == c) for c in range(n)) for r in range(n))
        elements = [ident]
        lengths = [0]
        index = {ident: 0}
        queue = deque([0])
        while queue:
            k = queue.popleft()
            for g in self.generators:
                m = _mat_mul(g, elements[k])
                if m not in index:
                    if len(elements) >= cap:
                        raise WeylGroupTooLarge(
                            f"Weyl group of {self.type_label} exceeds cap {cap}"
                        )
                    index[m] = len(elements)
                    elements.append(m)
                    lengths.append(lengths[k] + 1)
                    queue.append(index[m])
        self.weyl_elements: tuple[Matrix, ...] = tuple(elements)
        self.lengths: tuple[int, ...] = tuple(lengths)
        self.signs: tuple[int, ...] = tuple(-1 if l % 2 else 1 for l in lengths)
        self._index = index
        self._inv_cache: list[int] | None = None

    def _build_roots(self) -> None:
        n = self.rank
        roots: dict[Weight, tuple[int, int]] = {}
        for k, m in enumerate(self.weyl_elements):
            for i in range(n):
                beta = _mat_vec(m, self.simple_roots[i])
                if beta not in roots:
                    roots[beta] = (k, i)
        pos = []
        for beta, (k, i) in roots.items():
            coords = self.root_coords(beta)
            if all(c >= 0 for c in coords):
                pos.append((sum(coords), coords, beta, k, i))
        pos.sort()
        self.positive_roots: tuple[Weight, ...] = tuple(b for _, _, b, _, _ in pos)
        self.positive_root_coords = tuple(c for _, c, _, _, _ in pos)
        # coroot of w.alpha_i pairs with lambda as (w^{-1} lambda)_i,
        # i.e. row i of the matrix of w^{-1}
        coroots = []
        for _, _, beta, k, i in pos:
            winv = self.weyl_elements[self.inverse_of(k)]
            coroots.append(winv[i])
        self.positive_coroots: tuple[Weight, ...] = tuple(coroots)
        self.highest_root = self.positive_roots[-1]
        # squared lengths (alpha_i, alpha_i) from symmetrizing the Cartan matrix
        d = [Fraction(0)] * n
        d[0] = Fraction(2)
        todo = [0]
        while todo:
            i = todo.pop()
            for j in range(n):
                if j != i and self.cartan[i][j] != 0 and d[j] == 0:
                    # a_ij d_i = a_ji d_j
                    d[j] = self.cartan[i][j] * d[i] / self.cartan[j][i]
                    todo.append(j)
        scale = min(d)
        self.simple_root_norms = tuple(x * 2 / scale for x in d)
        norms = [self._root_norm(c) for c in self.positive_root_coords]
        shortest = min(norms)
        short = [b for b, nm in zip(self.positive_roots, norms) if nm == shortest]
        self.highest_short_root: Weight = short[-1]

    def _root_norm(self, coords: Sequence[int]) -> Fraction:
        n = self.rank
        d = self.simple_root_norms
        return sum(
            (coords[i] * coords[j] * self.cartan[i][j] * d[i] / 2
             for i in range(n) for j in range(n)),
            Fraction(0),
        )

    # -- basic queries ----------------------------------------------------

    def __eq__(self, other):
        return isinstance(other, RootDatum) and self.cartan == other.cartan

    def __hash__(self):
        return hash(self.cartan)

    def __repr__(self):
        return f"RootDatum({self.type_label!r})"

    @property
    def order(self) -> int:
        return len(self.weyl_elements)

    def inverse_of(self, k: int) -> int:
        """Index of the inverse of Weyl element ``k``."""
        if self._inv_cache is None:
            inv = [-1] * len(self.weyl_elements)
            for a in range(len(self.weyl_elements)):
                if inv[a] >= 0:
                    continue
                # w = s_i1 ... s_il  =>  w^{-1} = s_il ... s_i1
                acc = self.weyl_elements[0]
                for i in self.reduced_word(a):
                    acc = _mat_mul(self.generators[i], acc)
                b = self._index[acc]
                inv[a] = b
                inv[b] = a
            self._inv_cache = inv
        return self._inv_cache[k]

    def reduced_word(self, k: int) -> list[int]:
        """A reduced word ``[i1, ..., il]`` with ``w_k = s_i1 ... s_il``."""
        word = []
        m = self.weyl_elements[k]
        length = self.lengths[k]
        while length:
            for i, g in enumerate(self.generators):
                # s_i * w is shorter, so w = s_i * (s_i w)
                cand = self._index[_mat_mul(g, m)]
                if self.lengths[cand] < length:
                    word.append(i)
                    m = self.weyl_elements[cand]
                    length -= 1
                    break
        return word

    def element_index(self, matrix: Matrix) -> int:
        return self._index[tuple(tuple(r) for r in matrix)]

    def check_weight(self, lam: Sequence[int]) -> Weight:
        lam = tuple(int(x) for x in lam)
        if len(lam) != self.rank:
            raise RootDataError(f"weight {lam} has length {len(lam)}, expected rank {self.rank}")
        return lam

    def root_coords_rational(self, beta: Sequence[int]) -> tuple[Fraction, ...]:
        return tuple(Fraction(sum(a * b for a, b in zip(row, beta)), self.det) for row in self._adj)

    def root_coords(self, beta: Sequence[int]) -> tuple[int, ...]:
        """Coordinates of ``beta`` in the simple-root basis.

        Raises RootDataError if ``beta`` is not in the root lattice.
        """
        out = []
        for row in self._adj:
            num = sum(a * b for a, b in zip(row, beta))
            q, r = divmod(num, self.det)
            if r:
                raise RootDataError(f"{tuple(beta)} is not in the root lattice")
            out.append(q)
        return tuple(out)

    def in_root_lattice(self, beta: Sequence[int]) -> bool:
        return all(sum(a * b for a, b in zip(row, beta)) % self.det == 0 for row in self._adj)

    def level(self, lam: Sequence[int]) -> int:
        """``<lam, 2 rho^vee>``: twice the height on the root lattice."""
        return sum(a * b for a, b in zip(self._two_rho_check, lam))

    def sort_key(self, lam: Weight) -> tuple:
        """Total order compatible with addition and refining dominance."""
        return (self.level(lam), lam)

    def pairing(self, lam: Sequence[int], k: int) -> int:
        """``<lam, beta^vee>`` for the k-th positive root ``beta``."""
        return sum(a * b for a, b in zip(self.positive_coroots[k], lam))

    def is_dominant(self, lam: Sequence[int]) -> bool:
        return all(x >= 0 for x in lam)

    def is_restricted(self, lam: Sequence[int], p: int) -> bool:
        return all(0 <= x <= p - 1 for x in lam)


@lru_cache(maxsize=None)
def build_root_datum(type_label, rank: int | None = None,
                     weyl_cap: int = DEFAULT_WEYL_CAP) -> RootDatum:
    """Build the root datum of a simple type, e.g. ``("A", 2)`` or ``"G2"``."""
    kind, rank = parse_type(type_label, rank)
    return RootDatum(f"{kind}{rank}", cartan_matrix(kind, rank), weyl_cap)


def parse_type(type_label, rank: int | None = None) -> tuple[str, int]:
    if isinstance(type_label, tuple):
        type_label, rank2 = type_label
        if rank is not None and rank != rank2:
            raise UnsupportedTypeError(f"rank mismatch: {type_label!r} vs rank {rank}")
        rank = rank2
    label = str(type_label).strip().upper()
    if not label or label[0] not in "ABCDEFG":
        raise UnsupportedTypeError(f"unsupported root system {type_label!r}")
    kind, rest = label[0], label[1:]
    if rest:
        try:
            r = int(rest)
        except ValueError:
            raise UnsupportedTypeError(f"unsupported root system {type_label!r}") from None
        if rank is not None and rank != r:
            raise UnsupportedTypeError(f"rank mismatch: {type_label!r} vs rank {rank}")
        rank = r
    if rank is None:
        raise UnsupportedTypeError(f"missing rank for {type_label!r}")
    return kind, rank


def datum_from_cartan(cartan: Sequence[Sequence[int]], label: str = "custom",
                      weyl_cap: int = DEFAULT_WEYL_CAP) -> RootDatum:
    return RootDatum(label, tuple(tuple(r) for r in cartan), weyl_cap)


def apply_weyl(datum: RootDatum, w_index: int, lam: Sequence[int]) -> Weight:
    return _mat_vec(datum.weyl_elements[w_index], lam)


def simple_reflection(datum: RootDatum, i: int, lam: Sequence[int]) -> Weight:
    c = lam[i]
    return tuple(x - c * a for x, a in zip(lam, datum.simple_roots[i]))


def weyl_orbit(datum: RootDatum, lam: Sequence[int]) -> set[Weight]:
    """The W-orbit of ``lam``, grown by simple reflections."""
    lam = tuple(lam)
    seen = {lam}
    stack = [lam]
    while stack:
        nu = stack.pop()
        for i in range(datum.rank):
            if nu[i]:
                mu = simple_reflection(datum, i, nu)
                if mu not in seen:
                    seen.add(mu)
                    stack.append(mu)
    return seen


def dominant_representative(datum: RootDatum, lam: Sequence[int]) -> tuple[Weight, int]:
    """Return the dominant element of the orbit of ``lam`` and a w taking lam there."""
    nu = tuple(lam)
    word = []
    while True:
        i = next((j for j, x in enumerate(nu) if x < 0), None)
        if i is None:
            break
        nu = simple_reflection(datum, i, nu)
        word.append(i)
    m = datum.weyl_elements[0]
    for i in word:
        m = _mat_mul(datum.generators[i], m)
    return nu, datum._index[m]


def dominance_leq(datum: RootDatum, lam: Sequence[int], mu: Sequence[int]) -> bool:
    """True iff ``mu - lam`` is a nonnegative integer combination of simple roots."""
    diff = [b - a for a, b in zip(lam, mu)]
    for row in datum._adj:
        num = sum(a * b for a, b in zip(row, diff))
        if num < 0 or num % datum.det:
            return False
    return True


def height(datum: RootDatum, beta: Sequence[int]) -> int:
    return sum(datum.root_coords(beta))
