"""Exact weight multiplicities for irreducible highest-weight modules.

The central entry point is `multiplicity`, a dispatcher that shrinks a query
as far as possible before evaluating any recursion:

1. conjugate ``mu`` into the dominant chamber (multiplicities are constant on
   Weyl orbits);
2. return 0 unless the dominant representative lies under ``lam``;
3. restrict to the Levi subsystem spanned by the support of ``lam - mu``
   (coordinates of the difference outside its support never matter);
4. lower the highest weight: wherever ``c_j <= a_j`` the coordinate ``a_j``
   may be replaced by ``c_j`` without changing the multiplicity;
5. if the reduced problem is simple type A and every coordinate of the
   difference equals one, read the answer off a closed-form product;
6. else if some ``0 < c_j <= a_j``, run the level recursion restricted to
   the positive roots through ``alpha_j`` (no bilinear form needed);
7. otherwise run the classical recursion over all positive roots.

Disconnected Levi supports factor the problem: the multiplicity over a
product system is the product over its simple components.  Every recursive
sub-query re-enters the dispatcher at step 1 and strictly decreases the
height of ``lam - mu``, which is asserted.

All arithmetic is exact; `Counters` tallies the work so the two recursions
can be compared operation-for-operation.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Dict, Optional, Sequence, Tuple

from .errors import (
    InexactDivision,
    NotDominant,
    NotUnder,
    PreconditionViolated,
    WrongType,
    ZeroHighestWeight,
)
from .rootsys import (
    RootSystem,
    RootVector,
    Weight,
    dominant_conjugate,
    is_under,
    orbit_size,
)

__all__ = [
    "Counters",
    "TraceStep",
    "ReductionTrace",
    "MultContext",
    "dlm",
    "freudenthal_classical",
    "fast_freudenthal",
    "lower_highest_weight",
    "levi_restrict",
    "type_a_closed",
    "multiplicity",
    "multiplicity_value",
    "character",
    "dimension",
]

ALGORITHMS = ("auto", "classical", "fast")


@dataclass
class Counters:
    """Work tallies: summand terms per recursion, form evaluations, memo hits."""

    classical_terms: int = 0
    fast_terms: int = 0
    inner_products: int = 0
    cache_hits: int = 0

    def copy(self) -> "Counters":
        return replace(self)

    def as_dict(self) -> Dict[str, int]:
        return {
            "classical_terms": self.classical_terms,
            "fast_terms": self.fast_terms,
            "inner_products": self.inner_products,
            "cache_hits": self.cache_hits,
        }


@dataclass
class TraceStep:
    """One dispatcher event; ``data`` holds 1-based indices or weight pairs."""

    kind: str
    data: tuple = ()

    def render(self) -> str:
        if not self.data:
            return self.kind
        inner = ",".join(str(x) for x in self.data)
        return f"{self.kind}[{inner}]"


@dataclass
class ReductionTrace:
    """Ordered record of the reductions and formulas applied to one query."""

    steps: list = field(default_factory=list)

    def add(self, kind: str, data: tuple = ()) -> None:
        self.steps.append(TraceStep(kind, data))

    def kinds(self) -> tuple:
        return tuple(step.kind for step in self.steps)

    def render(self) -> str:
        return " -> ".join(step.render() for step in self.steps) or "(none)"


class MultContext:
    """Memoised state for multiplicity queries against one highest weight.

    A context is single-owner while a computation runs.  Reductions spawn
    child contexts (smaller system or lowered highest weight) that share the
    same counters and pool, so diamond-shaped reductions are computed once.
    """

    def __init__(self, rs: RootSystem, lam, algorithm: str = "auto", *, counters=None, _pool=None):
        lam = rs.check_weight(lam)
        if any(x < 0 for x in lam):
            raise NotDominant(f"{lam} has a negative coordinate")
        if algorithm not in ALGORITHMS:
            raise PreconditionViolated(f"unknown algorithm {algorithm!r}")
        self.rs = rs
        self.lam: Weight = lam
        self.algorithm = algorithm
        self.memo: Dict[Weight, int] = {}
        self.counters: Counters = counters if counters is not None else Counters()
        self._pool = _pool if _pool is not None else {}
        self._pool[(rs.structural_key(), lam)] = self

    def child(self, rs: RootSystem, lam: Weight) -> "MultContext":
        key = (rs.structural_key(), lam)
        got = self._pool.get(key)
        if got is None:
            got = MultContext(rs, lam, self.algorithm, counters=self.counters, _pool=self._pool)
        return got


# -- the two shifted-form quantities ------------------------------------------


def dlm(rs: RootSystem, lam, mu) -> Fraction:
    """Denominator of the classical recursion: (lam+rho, lam+rho) - (mu+rho, mu+rho).

    Evaluated as ``2 (lam + rho, lam - mu) - (lam - mu, lam - mu)`` with exact
    rationals; ``mu`` may be any weight.  A zero value certifies multiplicity
    zero for dominant ``mu`` distinct from ``lam``.
    """
    lam = rs.check_weight(lam)
    if any(x < 0 for x in lam):
        raise NotDominant(f"{lam} has a negative coordinate")
    mu = rs.check_weight(mu)
    diff = tuple(a - m for a, m in zip(lam, mu))
    det = rs.cartan_det
    gamma = tuple(
        Fraction(sum(row[j] * dj for j, dj in enumerate(diff) if dj), det)
        for row in rs.cartan_adjugate
    )
    shifted = tuple(x + 1 for x in lam)
    return 2 * rs.inner_weight_root(shifted, gamma) - rs.norm_root(gamma)


def _dlm_integral(ctx: MultContext, c: RootVector) -> Fraction:
    """dlm for a difference already known in integer root coordinates."""
    shifted = tuple(x + 1 for x in ctx.lam)
    ctx.counters.inner_products += 2
    return 2 * ctx.rs.inner_weight_root(shifted, c) - ctx.rs.norm_root(c)


# -- reduction operations ------------------------------------------------------


def lower_highest_weight(rs: RootSystem, lam, mu) -> Tuple[Weight, Weight]:
    """Replace (lam, mu) by an equivalent pair with a lower highest weight.

    With ``c = lam - mu`` in root coordinates, every coordinate with
    ``c_j <= a_j`` may be cut down to ``a_j' = c_j`` while subtracting the
    same amount from ``mu``; the multiplicity is unchanged.  The maximal such
    index set is used.  When no coordinate qualifies the pair is returned
    unchanged.
    """
    lam = rs.check_weight(lam)
    if any(x < 0 for x in lam):
        raise NotDominant(f"{lam} has a negative coordinate")
    c = is_under(rs, mu, lam)
    if c is None:
        raise NotUnder(f"{tuple(mu)} does not lie under {lam}")
    lam2 = tuple(min(a, cj) for a, cj in zip(lam, c))
    mu2 = tuple(m + (b - a) for m, a, b in zip(rs.check_weight(mu), lam, lam2))
    return lam2, mu2


def levi_restrict(rs: RootSystem, lam, mu):
    """Cut the query down to the Levi subsystem carrying ``lam - mu``.

    Returns ``(sub_system, lam_restricted, mu_restricted, indices)`` where
    ``indices`` are the 1-based positions of the kept simple roots (the
    support of ``lam - mu``).  Multiplicities agree with the original query;
    a full support returns the inputs unchanged.
    """
    lam = rs.check_weight(lam)
    if any(x < 0 for x in lam):
        raise NotDominant(f"{lam} has a negative coordinate")
    mu = rs.check_weight(mu)
    c = is_under(rs, mu, lam)
    if c is None:
        raise NotUnder(f"{mu} does not lie under {lam}")
    support = tuple(j for j, cj in enumerate(c) if cj)
    if len(support) == rs.rank:
        return rs, lam, mu, tuple(j + 1 for j in support)
    sub = RootSystem(
        tuple(tuple(rs.cartan[i][j] for j in support) for i in support),
        scale=rs._scale,
    )
    lam_j = tuple(lam[j] for j in support)
    mu_j = tuple(mu[j] for j in support)
    return sub, lam_j, mu_j, tuple(j + 1 for j in support)


def type_a_closed(rs: RootSystem, lam) -> int:
    """Closed form in type A for ``mu = lam - (alpha_1 + ... + alpha_l)``.

    With ``I = {r : a_r != 0} = {r_1 < ... < r_N}`` the multiplicity is 1
    when N = 1 and otherwise the product of ``r_i - r_{i-1} + 1`` over
    consecutive pairs: the interval gaps between active nodes are the only
    data that matter.
    """
    if rs.family_ranks != (("A", rs.rank),):
        raise WrongType(f"closed form needs simple type A, got {rs.label()}")
    lam = rs.check_weight(lam)
    if any(x < 0 for x in lam):
        raise NotDominant(f"{lam} has a negative coordinate")
    active = [r + 1 for r, a in enumerate(lam) if a]
    if not active:
        raise ZeroHighestWeight("closed form undefined for the zero weight")
    out = 1
    for prev, cur in zip(active, active[1:]):
        out *= cur - prev + 1
    return out


# -- recursion engines ---------------------------------------------------------


def _pick_fast_j(rs: RootSystem, lam: Weight, c: RootVector) -> Optional[int]:
    """Admissible index (0-based) minimising the restricted root count, or None."""
    best = None
    best_size = None
    for j, cj in enumerate(c):
        if 0 < cj <= lam[j]:
            size = len(rs.roots_through[j])
            if best_size is None or size < best_size:
                best, best_size = j, size
    return best


def _classical_rhs(ctx: MultContext, mu_plus: Weight, c: RootVector, policy: str) -> int:
    """Classical recursion at a dominant weight strictly under the top."""
    rs = ctx.rs
    den = _dlm_integral(ctx, c)
    if den == 0:
        return 0
    height = sum(c)
    total = Fraction(0)
    for idx, root in enumerate(rs.pos_roots):
        root_f = rs.pos_roots_fundamental[idx]
        r = 1
        while True:
            rest = tuple(ci - r * ri for ci, ri in zip(c, root))
            if any(x < 0 for x in rest):
                break
            nu = tuple(m + r * w for m, w in zip(mu_plus, root_f))
            ctx.counters.classical_terms += 1
            m_nu = _mult(ctx, nu, policy, ht_bound=height)
            if m_nu:
                ctx.counters.inner_products += 1
                total += m_nu * rs.inner_weight_root(nu, root)
            r += 1
    value = 2 * total / den
    if value.denominator != 1 or value < 0:
        raise InexactDivision(f"classical recursion left remainder at {mu_plus}")
    return int(value)


def _fast_rhs(ctx: MultContext, mu: Weight, c: RootVector, j: int, policy: str) -> int:
    """Level recursion through alpha_j; needs 0 < c_j <= a_j, no bilinear form."""
    rs = ctx.rs
    cj = c[j]
    height = sum(c)
    total = 0
    for r in range(1, cj + 1):
        for idx in rs.roots_through[j]:
            root = rs.pos_roots[idx]
            ctx.counters.fast_terms += 1
            rest = tuple(ci - r * ri for ci, ri in zip(c, root))
            if any(x < 0 for x in rest):
                continue  # that shift is no longer under lam: multiplicity 0
            root_f = rs.pos_roots_fundamental[idx]
            nu = tuple(m + r * w for m, w in zip(mu, root_f))
            m_nu = _mult(ctx, nu, policy, ht_bound=height)
            if m_nu:
                total += root[j] * m_nu
    if total % cj:
        raise InexactDivision(f"level recursion not divisible by {cj} at {mu}")
    return total // cj


def _type_a_all_ones(rs: RootSystem, lam: Weight, c: RootVector) -> bool:
    return rs.family_ranks == (("A", rs.rank),) and all(x == 1 for x in c)


def _terminal(ctx: MultContext, mu: Weight, c: RootVector, trace: Optional[ReductionTrace]) -> int:
    """Steps 5-7 on a simple component with full support; memoised per orbit."""
    rs = ctx.rs
    mu_plus, _ = dominant_conjugate(rs, mu)
    hit = ctx.memo.get(mu_plus)
    if hit is not None:
        ctx.counters.cache_hits += 1
        return hit
    if _type_a_all_ones(rs, ctx.lam, c):
        if trace is not None:
            trace.add("type_a_closed", tuple(r + 1 for r, a in enumerate(ctx.lam) if a))
        m = type_a_closed(rs, ctx.lam)
    else:
        j = _pick_fast_j(rs, ctx.lam, c)
        if j is not None:
            if trace is not None:
                trace.add("fast_freudenthal", (j + 1,))
            m = _fast_rhs(ctx, mu, c, j, "auto")
        else:
            if trace is not None:
                trace.add("classical_freudenthal")
            c_plus = is_under(rs, mu_plus, ctx.lam)
            if c_plus is None:
                m = 0
            elif not any(c_plus):
                m = 1
            else:
                m = _classical_rhs(ctx, mu_plus, c_plus, "auto")
    ctx.memo[mu_plus] = m
    return m


def _auto_reduce(ctx: MultContext, mu_plus: Weight, c: RootVector, trace: Optional[ReductionTrace]) -> int:
    """Steps 3-7: Levi restriction, factorisation, lowering, then a formula."""
    rs = ctx.rs
    lam = ctx.lam
    support = tuple(j for j, cj in enumerate(c) if cj)
    if len(support) < rs.rank:
        if trace is not None:
            trace.add("levi_restrict", tuple(j + 1 for j in support))
        sub = RootSystem(
            tuple(tuple(rs.cartan[i][j] for j in support) for i in support),
            scale=rs._scale,
        )
        lam_j = tuple(lam[j] for j in support)
        c_j = tuple(c[j] for j in support)
    else:
        sub, lam_j, c_j = rs, lam, c

    result = 1
    for comp, rs_k in sub.component_systems:
        lam_k = tuple(lam_j[i] for i in comp)
        c_k = tuple(c_j[i] for i in comp)
        lam_low = tuple(min(a, cj) for a, cj in zip(lam_k, c_k))
        if lam_low != lam_k and trace is not None:
            lowered = tuple(i + 1 for i, (a, cj) in enumerate(zip(lam_k, c_k)) if cj <= a)
            trace.add("lower_weight", (lam_k, lam_low, lowered))
        mu_low = tuple(
            a - sum(rs_k.cartan[i][k] * ck for k, ck in enumerate(c_k) if ck)
            for i, a in enumerate(lam_low)
        )
        child = ctx.child(rs_k, lam_low)
        result *= _terminal(child, mu_low, c_k, trace)
    return result


def _mult(
    ctx: MultContext,
    mu: Weight,
    policy: str,
    trace: Optional[ReductionTrace] = None,
    ht_bound: Optional[int] = None,
) -> int:
    """Dispatcher entry; every recursive sub-query re-enters here."""
    rs = ctx.rs
    mu_plus, word = dominant_conjugate(rs, mu)
    if trace is not None and word:
        trace.add("weyl_conjugate", word)
    hit = ctx.memo.get(mu_plus)
    if hit is not None:
        ctx.counters.cache_hits += 1
        return hit
    c = is_under(rs, mu_plus, ctx.lam)
    if c is None:
        if trace is not None:
            trace.add("zero_by_dominance")
        return 0
    assert ht_bound is None or sum(c) < ht_bound, "recursion must decrease height"
    if not any(c):
        ctx.memo[mu_plus] = 1
        return 1
    if policy == "classical":
        m = _classical_rhs(ctx, mu_plus, c, "classical")
    elif policy == "fast":
        j = _pick_fast_j(rs, ctx.lam, c)
        if j is not None:
            m = _fast_rhs(ctx, mu_plus, c, j, "fast")
        else:
            m = _classical_rhs(ctx, mu_plus, c, "fast")
    else:
        m = _auto_reduce(ctx, mu_plus, c, trace)
    ctx.memo[mu_plus] = m
    return m


# -- public formula surfaces ----------------------------------------------------


def freudenthal_classical(ctx: MultContext, mu) -> int:
    """Multiplicity by the classical recursion alone (the baseline algorithm).

    Conjugates ``mu`` into the dominant chamber, walks the recursion over all
    positive roots, and keeps every sub-query on the classical path, so the
    context counters reflect the unaided algorithm.
    """
    mu = ctx.rs.check_weight(mu)
    return _mult(ctx, mu, "classical")


def fast_freudenthal(ctx: MultContext, mu, c, j: int) -> int:
    """Multiplicity by the level recursion through alpha_j.

    Requires ``c = lam - mu`` in root coordinates with ``0 < c_j <= a_j``
    (1-based ``j``).  Only positive roots containing ``alpha_j`` enter the
    sum, weighted by their alpha_j-coefficient, and no bilinear form is
    evaluated.  Sub-queries are routed back through the dispatcher under the
    context's configured algorithm.
    """
    rs = ctx.rs
    mu = rs.check_weight(mu)
    c = tuple(int(x) for x in c)
    if c != is_under(rs, mu, ctx.lam):
        raise PreconditionViolated(f"c must equal the root coordinates of lam - mu, got {c}")
    if not 1 <= j <= rs.rank:
        raise PreconditionViolated(f"j must lie in 1..{rs.rank}, got {j}")
    if not 0 < c[j - 1] <= ctx.lam[j - 1]:
        raise PreconditionViolated(
            f"need 0 < c_j <= a_j at j={j}, got c_j={c[j - 1]}, a_j={ctx.lam[j - 1]}"
        )
    m = _fast_rhs(ctx, mu, c, j - 1, ctx.algorithm)
    mu_plus, _ = dominant_conjugate(rs, mu)
    ctx.memo[mu_plus] = m
    return m


def multiplicity(rs: RootSystem, lam, mu, *, algorithm: str = "auto", ctx: Optional[MultContext] = None):
    """Weight multiplicity of mu in the irreducible module of highest weight lam.

    Returns ``(multiplicity, trace)``; the trace records the top-level
    reduction pipeline.  ``algorithm`` selects the recursion policy:
    ``"auto"`` (full reductions), ``"classical"`` or ``"fast"``.  Passing a
    context reuses its memo and counters.
    """
    if ctx is None:
        ctx = MultContext(rs, lam, algorithm)
    else:
        if ctx.rs is not rs or ctx.lam != rs.check_weight(lam):
            raise PreconditionViolated("context bound to a different system or highest weight")
        ctx.algorithm = algorithm
    trace = ReductionTrace()
    m = _mult(ctx, rs.check_weight(mu), algorithm, trace)
    return m, trace


def multiplicity_value(rs: RootSystem, lam, mu, *, algorithm: str = "auto", ctx: Optional[MultContext] = None) -> int:
    """Same as `multiplicity` but without building a trace."""
    if ctx is None:
        ctx = MultContext(rs, lam, algorithm)
    return _mult(ctx, rs.check_weight(mu), algorithm)


def character(rs: RootSystem, lam) -> Dict[Weight, int]:
    """All dominant weights of the module with their multiplicities.

    Weights are found by breadth-first subtraction of simple roots from
    ``lam``, keeping exactly those whose dominant conjugate still lies under
    ``lam``; each dominant representative is then valued by an independent
    dispatcher context.
    """
    lam = rs.check_weight(lam)
    if any(x < 0 for x in lam):
        raise NotDominant(f"{lam} has a negative coordinate")
    if rs.rank == 0:
        return {(): 1}
    columns = [rs.simple_root_fundamental(i) for i in range(rs.rank)]
    seen = {lam}
    queue = [lam]
    dominant = []
    while queue:
        nxt = []
        for nu in queue:
            nu_plus, _ = dominant_conjugate(rs, nu)
            if is_under(rs, nu_plus, lam) is None:
                continue
            if nu == nu_plus:
                dominant.append(nu)
            for col in columns:
                child = tuple(x - y for x, y in zip(nu, col))
                if child not in seen:
                    seen.add(child)
                    nxt.append(child)
        queue = nxt
    return {mu: multiplicity_value(rs, lam, mu) for mu in dominant}


def dimension(rs: RootSystem, lam) -> int:
    """Module dimension as the orbit-size-weighted sum of the character.

    Independent of the closed product formula `weyl_dimension`, which makes
    the two a useful cross-check.
    """
    return sum(m * orbit_size(rs, mu) for mu, m in character(rs, lam).items())
