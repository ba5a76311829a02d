"""Exact root-system data for the finite-dimensional semisimple Lie types.

All arithmetic is done with Python integers and `fractions.Fraction`; no
floating point appears anywhere.

Conventions
-----------
* Families and ranks follow the Bourbaki tables: A (l >= 1), B (l >= 2),
  C (l >= 2), D (l >= 3), E (l in {6, 7, 8}), F (l = 4), G (l = 2).
* A *weight* is a tuple of ``l`` integers: coordinates in the basis of
  fundamental weights.  A *root vector* is a tuple of ``l`` integers:
  coordinates in the basis of simple roots.
* ``cartan[i][j] = <alpha_j, alpha_i^vee> = 2 (alpha_j, alpha_i) / (alpha_i,
  alpha_i)``.  With this convention column ``j`` of the Cartan matrix holds
  the fundamental-weight coordinates of the simple root ``alpha_j``.
* The symmetrizer ``d`` consists of positive rationals with
  ``d[i] * cartan[i][j]`` symmetric; it is normalised so that short roots
  have squared length 2 inside each simple factor.  The optional keyword
  ``scale`` multiplies the whole symmetrizer by one positive rational, which
  must leave dimensions, orbit sizes and multiplicities unchanged.
* Positive roots are generated height by height through root strings:
  ``beta + alpha_i`` is a root iff ``p - <beta, alpha_i^vee> > 0`` where
  ``p`` is the largest ``k`` with ``beta - k alpha_i`` a known root.  The
  stored order is: simple roots first in index order, then increasing
  height, ties broken lexicographically on coefficients.
* Simple-root indices exposed to callers (reflection words, Levi index
  maps) are 1-based, matching the labels alpha_1 .. alpha_l.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence, Tuple

from .errors import DimensionMismatch, InvalidType, NotDominant

__all__ = [
    "Weight",
    "RootVector",
    "RootSystem",
    "build_root_system",
    "inner",
    "root_to_weight_coords",
    "weight_to_root_coords",
    "is_under",
    "dominant_conjugate",
    "weyl_dimension",
    "orbit_size",
]

Weight = Tuple[int, ...]
RootVector = Tuple[int, ...]

_RANK_RULES = {
    "A": lambda l: l >= 1,
    "B": lambda l: l >= 2,
    "C": lambda l: l >= 2,
    "D": lambda l: l >= 3,
    "E": lambda l: l in (6, 7, 8),
    "F": lambda l: l == 4,
    "G": lambda l: l == 2,
}


def _positive_root_count(family: str, rank: int) -> int:
    """Number of positive roots of one simple factor (classical tables)."""
    if family == "A":
        return rank * (rank + 1) // 2
    if family in ("B", "C"):
        return rank * rank
    if family == "D":
        return rank * (rank - 1)
    return {("G", 2): 6, ("F", 4): 24, ("E", 6): 36, ("E", 7): 63, ("E", 8): 120}[
        (family, rank)
    ]


def _factorial(n: int) -> int:
    out = 1
    for k in range(2, n + 1):
        out *= k
    return out


def _weyl_order(family: str, rank: int) -> int:
    """Order of the Weyl group of one simple factor."""
    if family == "A":
        return _factorial(rank + 1)
    if family in ("B", "C"):
        return (1 << rank) * _factorial(rank)
    if family == "D":
        return (1 << (rank - 1)) * _factorial(rank)
    return {("G", 2): 12, ("F", 4): 1152, ("E", 6): 51840, ("E", 7): 2903040, ("E", 8): 696729600}[
        (family, rank)
    ]


def _cartan_matrix(family: str, rank: int) -> tuple:
    """Bourbaki Cartan matrix, entry [i][j] = <alpha_j, alpha_i^vee>."""
    l = rank
    a = [[0] * l for _ in range(l)]
    for i in range(l):
        a[i][i] = 2

    def link(i: int, j: int, down: int = -1, up: int = -1) -> None:
        # down = <alpha_j, alpha_i^vee> into a[i][j], up = <alpha_i, alpha_j^vee>
        a[i][j] = down
        a[j][i] = up

    if family == "A":
        for i in range(l - 1):
            link(i, i + 1)
    elif family == "B":
        # alpha_l short: <alpha_{l-1}, alpha_l^vee> = -2
        for i in range(l - 2):
            link(i, i + 1)
        link(l - 2, l - 1, down=-1, up=-2)
    elif family == "C":
        # alpha_l long: <alpha_l, alpha_{l-1}^vee> = -2
        for i in range(l - 2):
            link(i, i + 1)
        link(l - 2, l - 1, down=-2, up=-1)
    elif family == "D":
        for i in range(l - 2):
            link(i, i + 1)
        link(l - 3, l - 1)
    elif family == "E":
        # chain 1-3-4-5-6(-7)(-8) with node 2 hanging off node 4
        chain = [0, 2, 3, 4, 5, 6, 7][: l - 1]
        for i, j in zip(chain, chain[1:]):
            link(i, j)
        link(1, 3)
    elif family == "F":
        # 1 - 2 => 3 - 4 with alpha_1, alpha_2 long
        link(0, 1)
        link(1, 2, down=-1, up=-2)
        link(2, 3)
    elif family == "G":
        # alpha_1 short: <alpha_2, alpha_1^vee> = -3
        link(0, 1, down=-3, up=-1)
    return tuple(tuple(row) for row in a)


def _connected_components(cartan: tuple) -> tuple:
    """Index sets of the Dynkin-diagram components, ordered by smallest node."""
    l = len(cartan)
    seen = [False] * l
    comps = []
    for start in range(l):
        if seen[start]:
            continue
        stack, comp = [start], []
        seen[start] = True
        while stack:
            i = stack.pop()
            comp.append(i)
            for j in range(l):
                if j != i and not seen[j] and cartan[i][j] != 0:
                    seen[j] = True
                    stack.append(j)
        comps.append(tuple(sorted(comp)))
    return tuple(comps)


def _classify_component(cartan: tuple, nodes: tuple) -> tuple:
    """Identify the Bourbaki (family, rank) of one connected Cartan block."""
    n = len(nodes)
    if n == 1:
        return ("A", 1)
    sub = {
        (i, j): cartan[nodes[i]][nodes[j]]
        for i in range(n)
        for j in range(n)
        if i != j
    }
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if sub[(i, j)] != 0]
    if len(edges) != n - 1:
        raise InvalidType("Cartan component is not a tree")
    deg = [0] * n
    for i, j in edges:
        deg[i] += 1
        deg[j] += 1

    # |entry| = 2 or 3 marks the multiple edge; the row index of the large
    # entry is the short root of the pair.
    triples = [e for e in edges if min(sub[e], sub[(e[1], e[0])]) == -3]
    doubles = [e for e in edges if min(sub[e], sub[(e[1], e[0])]) == -2]
    if triples:
        if n == 2 and not doubles:
            return ("G", 2)
        raise InvalidType("triple edge in a component of rank != 2")
    if doubles:
        if len(doubles) > 1 or max(deg) > 2:
            raise InvalidType("unrecognised multiply-laced component")
        i, j = doubles[0]
        short, long_ = (i, j) if sub[(i, j)] == -2 else (j, i)
        if n == 2:
            return ("B", 2) if short > long_ else ("C", 2)
        if deg[short] == 1:
            return ("B", n)
        if deg[long_] == 1:
            return ("C", n)
        if n == 4:
            return ("F", 4)
        raise InvalidType("interior double edge in a component of rank != 4")

    if max(deg) <= 2:
        return ("A", n)
    forks = [v for v in range(n) if deg[v] == 3]
    if len(forks) != 1 or max(deg) > 3:
        raise InvalidType("unrecognised simply-laced component")
    adj = {v: [] for v in range(n)}
    for i, j in edges:
        adj[i].append(j)
        adj[j].append(i)
    fork = forks[0]
    arms = []
    for first in adj[fork]:
        length, prev, cur = 1, fork, first
        while True:
            nxt = [v for v in adj[cur] if v != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            length += 1
        arms.append(length)
    arms.sort()
    if arms[0] == 1 and arms[1] == 1:
        return ("D", n)
    if arms[:2] == [1, 2] and arms[2] in (2, 3, 4):
        return ("E", n)
    raise InvalidType("branching pattern outside the finite types")


def _invert_matrix(rows: Sequence[Sequence[Fraction]]) -> tuple:
    """Exact inverse by Gauss-Jordan elimination over Fraction."""
    n = len(rows)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == k)) for k in range(n)]
           for i, row in enumerate(rows)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            raise InvalidType("singular Cartan matrix")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = Fraction(1) / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                factor = aug[r][col]
                aug[r] = [x - factor * y for x, y in zip(aug[r], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


def _integer_adjugate(cartan: tuple) -> tuple:
    """(adjugate matrix, determinant) with integer entries; cartan * adj = det * I."""
    n = len(cartan)
    inv = _invert_matrix(cartan)
    mat = [[Fraction(x) for x in row] for row in cartan]
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if mat[r][col] != 0), None)
        if pivot is None:
            raise InvalidType("singular Cartan matrix")
        if pivot != col:
            mat[col], mat[pivot] = mat[pivot], mat[col]
            det = -det
        det *= mat[col][col]
        inv_p = Fraction(1) / mat[col][col]
        for r in range(col + 1, n):
            if mat[r][col] != 0:
                factor = mat[r][col] * inv_p
                mat[r] = [x - factor * y for x, y in zip(mat[r], mat[col])]
    if det.denominator != 1:
        raise InvalidType("non-integer Cartan determinant")
    d = int(det)
    adj = tuple(
        tuple(int(entry * d) for entry in row) for row in inv
    )
    return adj, d


def _generate_positive_roots(cartan: tuple) -> tuple:
    """All positive roots in simple-root coordinates, by root strings."""
    l = len(cartan)
    if l == 0:
        return ()
    simple = [tuple(int(i == k) for k in range(l)) for i in range(l)]
    known = set(simple)
    by_height = [list(simple)]
    current = list(simple)
    while current:
        nxt = set()
        for beta in current:
            coords = tuple(sum(cartan[i][k] * beta[k] for k in range(l)) for i in range(l))
            for i in range(l):
                up = list(beta)
                up[i] += 1
                cand = tuple(up)
                if cand in known or cand in nxt:
                    continue
                if sum(beta) == 1 and beta[i] == 1:
                    continue  # 2*alpha_i is never a root
                p = 0
                down = list(beta)
                while True:
                    down[i] -= 1
                    if down[i] < 0 or tuple(down) not in known:
                        break
                    p += 1
                if p - coords[i] > 0:
                    nxt.add(cand)
        known |= nxt
        current = sorted(nxt)
        if current:
            by_height.append(current)
    ordered = list(simple)
    for layer in by_height[1:]:
        ordered.extend(sorted(layer))
    return tuple(ordered)


class RootSystem:
    """Immutable container for one (possibly product) root system.

    Instances are fully built in ``__init__`` and never mutated afterwards,
    so a single object may be shared freely across threads or contexts.
    """

    def __init__(self, cartan, family_ranks=None, *, scale=Fraction(1)):
        cartan = tuple(tuple(int(x) for x in row) for row in cartan)
        l = len(cartan)
        for row in cartan:
            if len(row) != l:
                raise InvalidType("Cartan matrix must be square")
        for i in range(l):
            if cartan[i][i] != 2:
                raise InvalidType("Cartan diagonal must be 2")
            for j in range(l):
                if i != j:
                    if cartan[i][j] not in (0, -1, -2, -3):
                        raise InvalidType("off-diagonal Cartan entries must lie in {0,-1,-2,-3}")
                    if (cartan[i][j] == 0) != (cartan[j][i] == 0):
                        raise InvalidType("Cartan zero pattern must be symmetric")
        scale = Fraction(scale)
        if scale <= 0:
            raise InvalidType("symmetrizer scale must be positive")

        self.rank: int = l
        self.cartan: tuple = cartan
        self.components: tuple = _connected_components(cartan)
        if family_ranks is None:
            family_ranks = tuple(
                _classify_component(cartan, comp) for comp in self.components
            )
        else:
            family_ranks = tuple((str(f), int(r)) for f, r in family_ranks)
            if len(family_ranks) != len(self.components):
                raise InvalidType("family_ranks must list one pair per component")
        self.family_ranks: tuple = family_ranks

        self.symmetrizer: tuple = self._solve_symmetrizer(scale)
        self._check_positive_definite()

        if l:
            self.cartan_adjugate, self.cartan_det = _integer_adjugate(cartan)
        else:
            self.cartan_adjugate, self.cartan_det = (), 1
        self.cartan_inv: tuple = tuple(
            tuple(Fraction(x, self.cartan_det) for x in row) for row in self.cartan_adjugate
        )
        # Gram matrices: (alpha_i, alpha_j) and (lam_i, lam_j)
        self.gram_simple: tuple = tuple(
            tuple(self.symmetrizer[i] * cartan[i][j] for j in range(l)) for i in range(l)
        )
        self.gram_fundamental: tuple = tuple(
            tuple(self.symmetrizer[i] * self.cartan_inv[i][j] for j in range(l))
            for i in range(l)
        )
        self.rho: Weight = (1,) * l

        self.pos_roots: tuple = _generate_positive_roots(cartan)
        expected = sum(_positive_root_count(f, r) for f, r in family_ranks)
        if len(self.pos_roots) != expected:
            raise InvalidType(
                f"generated {len(self.pos_roots)} positive roots, tables say {expected}"
            )
        self.pos_roots_fundamental: tuple = tuple(
            tuple(sum(cartan[i][k] * root[k] for k in range(l)) for i in range(l))
            for root in self.pos_roots
        )
        # roots grouped by the simple coordinate they contain: index lists into pos_roots
        self.roots_through: tuple = tuple(
            tuple(idx for idx, root in enumerate(self.pos_roots) if root[j] > 0)
            for j in range(l)
        )
        self.weyl_order: int = 1
        for f, r in family_ranks:
            self.weyl_order *= _weyl_order(f, r)

        # per-component simple subsystems, built eagerly so instances stay frozen
        if len(self.components) == 1 and l:
            self.component_systems: tuple = ((self.components[0], self),)
        else:
            self.component_systems = tuple(
                (
                    comp,
                    RootSystem(
                        tuple(tuple(cartan[i][j] for j in comp) for i in comp),
                        (self.family_ranks[k],),
                        scale=scale,
                    ),
                )
                for k, comp in enumerate(self.components)
            )
        self._scale = scale

    # -- construction helpers -------------------------------------------------

    def _solve_symmetrizer(self, scale: Fraction) -> tuple:
        """Positive rationals d with d_i a_ij = d_j a_ji, short roots at length^2 = 2."""
        l = self.rank
        d = [None] * l
        for comp in self.components:
            d[comp[0]] = Fraction(1)
            queue = [comp[0]]
            while queue:
                i = queue.pop()
                for j in comp:
                    if j != i and self.cartan[i][j] != 0 and d[j] is None:
                        d[j] = d[i] * Fraction(self.cartan[i][j], self.cartan[j][i])
                        queue.append(j)
            low = min(d[j] for j in comp)
            for j in comp:
                d[j] /= low
        for i in range(l):
            for j in range(l):
                if d[i] * self.cartan[i][j] != d[j] * self.cartan[j][i]:
                    raise InvalidType("Cartan matrix is not symmetrizable")
        return tuple(x * scale for x in d)

    def _check_positive_definite(self) -> None:
        """Leading principal minors of the symmetrized matrix must be positive."""
        l = self.rank
        mat = [
            [self.symmetrizer[i] * self.cartan[i][j] for j in range(l)]
            for i in range(l)
        ]
        for col in range(l):
            if mat[col][col] <= 0:
                raise InvalidType("symmetrized Cartan matrix is not positive definite")
            inv_p = Fraction(1) / mat[col][col]
            for r in range(col + 1, l):
                if mat[r][col] != 0:
                    factor = mat[r][col] * inv_p
                    mat[r] = [x - factor * y for x, y in zip(mat[r], mat[col])]

    # -- small exact helpers used across the package --------------------------

    def check_weight(self, v: Sequence[int]) -> Weight:
        v = tuple(int(x) for x in v)
        if len(v) != self.rank:
            raise DimensionMismatch(f"expected {self.rank} coordinates, got {len(v)}")
        return v

    def pairing(self, v: Weight, i: int) -> int:
        """<v, alpha_i^vee>: just the i-th fundamental coordinate."""
        return v[i]

    def inner_weight_root(self, v: Weight, c: Sequence[int]) -> Fraction:
        """(v, gamma) for a weight v and gamma = sum_k c_k alpha_k."""
        total = Fraction(0)
        for vk, ck, dk in zip(v, c, self.symmetrizer):
            if vk and ck:
                total += dk * vk * ck
        return total

    def norm_root(self, c: Sequence) -> Fraction:
        """(gamma, gamma) for gamma given in simple-root coordinates."""
        total = Fraction(0)
        for i, ci in enumerate(c):
            if ci:
                row = self.gram_simple[i]
                total += ci * sum(row[j] * cj for j, cj in enumerate(c) if cj)
        return total

    def simple_root_fundamental(self, i: int) -> Weight:
        """alpha_i in fundamental-weight coordinates (column i of the Cartan matrix)."""
        return tuple(self.cartan[k][i] for k in range(self.rank))

    def reflect(self, v: Weight, i: int) -> Weight:
        """Simple reflection s_i(v) = v - <v, alpha_i^vee> alpha_i (0-based i)."""
        t = v[i]
        if t == 0:
            return v
        return tuple(vk - t * self.cartan[k][i] for k, vk in enumerate(v))

    def structural_key(self) -> tuple:
        return (self.cartan, self.symmetrizer)

    def label(self) -> str:
        return "x".join(f"{f}{r}" for f, r in self.family_ranks) or "trivial"

    def __repr__(self) -> str:  # pragma: no cover
        return f"RootSystem({self.label()})"


def build_root_system(family: str, rank: int, *, scale=Fraction(1)) -> RootSystem:
    """Construct the simple root system of the given family and rank.

    Parameters
    ----------
    family : str
        One of "A".."G" (case-insensitive).
    rank : int
        Rank, subject to the usual restrictions (A: l>=1, B/C: l>=2, D: l>=3,
        E: 6..8, F: 4, G: 2).
    scale : Fraction, keyword-only
        Positive rational multiplying the symmetrizer; observable results do
        not depend on it.

    Raises
    ------
    InvalidType
        If (family, rank) lies outside the table.
    """
    family = str(family).upper()
    rule = _RANK_RULES.get(family)
    if rule is None or not isinstance(rank, int) or not rule(rank):
        raise InvalidType(f"({family}, {rank}) is not a finite simple type")
    return RootSystem(_cartan_matrix(family, rank), ((family, rank),), scale=scale)


def inner(rs: RootSystem, v: Sequence[int], w: Sequence[int]) -> Fraction:
    """Invariant bilinear form (v, w) of two weights.

    Both arguments are fundamental-weight coordinate tuples; the result is an
    exact rational.
    """
    v = rs.check_weight(v)
    w = rs.check_weight(w)
    total = Fraction(0)
    for i, vi in enumerate(v):
        if vi:
            row = rs.gram_fundamental[i]
            total += vi * sum(row[j] * wj for j, wj in enumerate(w) if wj)
    return total


def root_to_weight_coords(rs: RootSystem, c: Sequence[int]) -> Weight:
    """Rewrite gamma = sum c_k alpha_k in fundamental-weight coordinates."""
    if len(c) != rs.rank:
        raise DimensionMismatch(f"expected {rs.rank} coordinates, got {len(c)}")
    return tuple(
        sum(rs.cartan[i][k] * ck for k, ck in enumerate(c) if ck) for i in range(rs.rank)
    )


def weight_to_root_coords(rs: RootSystem, v: Sequence[int]) -> tuple:
    """Rewrite a weight in simple-root coordinates; entries are exact rationals.

    The Cartan matrix is invertible, so a rational solution always exists;
    integrality and nonnegativity are judged separately by `is_under`.
    """
    v = rs.check_weight(v)
    det = rs.cartan_det
    return tuple(
        Fraction(sum(row[j] * vj for j, vj in enumerate(v) if vj), det)
        for row in rs.cartan_adjugate
    )


def is_under(rs: RootSystem, mu: Sequence[int], lam: Sequence[int]) -> Optional[RootVector]:
    """Root coordinates of lam - mu when mu lies under lam, else None.

    "Under" means lam - mu is a nonnegative *integer* combination of simple
    roots; the zero vector is returned when mu == lam.
    """
    mu = rs.check_weight(mu)
    lam = rs.check_weight(lam)
    diff = tuple(a - m for a, m in zip(lam, mu))
    det = rs.cartan_det
    out = []
    for row in rs.cartan_adjugate:
        num = sum(row[j] * dj for j, dj in enumerate(diff) if dj)
        if num % det or num < 0:
            return None
        out.append(num // det)
    return tuple(out)


def dominant_conjugate(rs: RootSystem, mu: Sequence[int]) -> tuple:
    """Dominant Weyl-orbit representative of mu plus the reflection word.

    Returns ``(mu_plus, word)`` with 1-based ``word = [i1, i2, ...]`` such
    that applying ``s_{i1}``, then ``s_{i2}``, ... to ``mu`` yields
    ``mu_plus``.  Each step reflects at the smallest negative coordinate,
    which strictly raises the weight in the dominance order, so the loop
    terminates with the unique dominant representative.
    """
    v = rs.check_weight(mu)
    word = []
    while True:
        i = next((k for k, x in enumerate(v) if x < 0), None)
        if i is None:
            return v, tuple(word)
        v = rs.reflect(v, i)
        word.append(i + 1)


def weyl_dimension(rs: RootSystem, lam: Sequence[int]) -> int:
    """Dimension of the irreducible module of highest weight lam.

    Evaluates the product over positive roots of (lam + rho, alpha) /
    (rho, alpha) with exact rationals; the result is always an integer.
    """
    lam = rs.check_weight(lam)
    if any(x < 0 for x in lam):
        raise NotDominant(f"{lam} has a negative coordinate")
    shifted = tuple(x + 1 for x in lam)
    num = Fraction(1)
    den = Fraction(1)
    for root in rs.pos_roots:
        num *= rs.inner_weight_root(shifted, root)
        den *= rs.inner_weight_root(rs.rho, root)
    out = num / den
    assert out.denominator == 1
    return int(out)


def orbit_size(rs: RootSystem, mu: Sequence[int]) -> int:
    """Size of the Weyl orbit of a dominant weight.

    The stabiliser of a dominant weight is the parabolic subgroup generated
    by the reflections at its zero coordinates, so the size is the quotient
    of the two group orders.
    """
    mu = rs.check_weight(mu)
    if any(x < 0 for x in mu):
        raise NotDominant(f"{mu} has a negative coordinate")
    zero = tuple(i for i, x in enumerate(mu) if x == 0)
    stab = 1
    if zero:
        sub = tuple(tuple(rs.cartan[i][j] for j in zero) for i in zero)
        for comp in _connected_components(sub):
            f, r = _classify_component(sub, comp)
            stab *= _weyl_order(f, r)
    assert rs.weyl_order % stab == 0
    return rs.weyl_order // stab
