"""Finite commutative rings with identity, as dense operation tables.

Elements of a ring of size n are the indices 0..n-1. Addition and
multiplication are n x n int32 tables. Every constructor funnels through
FiniteRing, whose verification pass proves all ring axioms before the
object becomes visible, so any FiniteRing that exists is a genuine
finite commutative ring with 1 != 0.

The verification is complete, not sampled. Commutativity of both
operations, the identities, additive inverses, 0*x = 0, and the
unit/regular-element scans are checked over all pairs directly. The
three triple-quantified axioms are proved by reduction to a small
additive generating set:

- associativity of + via Light's test: if S generates (A,+) and
  (x+g)+y = x+(g+y) holds for all g in S and all x, y, then + is
  associative (induction over products of generators);
- left distributivity a*(g+x) = a*g + a*x for all g in S, all a, x,
  which extends to arbitrary second arguments by induction on sums of
  generators (every element is a nonempty sum of generators because
  ord(g)*g = 0), using the already proved associativity of +;
- associativity of * on generator slices (g*y)*z = g*(y*z), extended to
  all first arguments by the same induction using distributivity and
  the checked commutativity of *.

Rings of size <= 64 additionally get the literal dense n^3 triple scans,
so the reduction is cross-checked against brute force on every small
ring in every run.
"""

from __future__ import annotations

import os
from typing import TYPE_CHECKING, Iterable, Sequence

import numpy as np

from . import expr as ex
from .errors import (
    CapExceeded,
    ImproperIdeal,
    NotMultClosed,
    NotPrime,
    RingMismatch,
    SearchCapExceeded,
    ZeroInS,
)

if TYPE_CHECKING:
    from .ideals import Ideal

DEFAULT_ELEMENT_CAP = 1024
ISO_SEARCH_CAP = 64
_LITERAL_SCAN_MAX = 64


def element_cap() -> int:
    """Current element cap; the IDEALIS_CAP env var overrides the default."""
    raw = os.environ.get("IDEALIS_CAP", "").strip()
    return int(raw) if raw else DEFAULT_ELEMENT_CAP


class FiniteRing:
    """A verified finite commutative ring with identity.

    Attributes:
        size: number of elements.
        add, mul: dense int32 operation tables (read-only).
        zero, one: indices of the additive and multiplicative identities.
        neg: neg[a] is the additive inverse of a.
        units: frozenset of unit indices.
        unit_mask: boolean array marking units.
        nonunits: sorted int array of nonunit indices (zero included).
        provenance: the construction expression.
    """

    def __init__(self, add, mul, zero: int, one: int,
                 provenance: ex.RingExpr, cap: int | None = None):
        add = np.ascontiguousarray(add, dtype=np.int32)
        mul = np.ascontiguousarray(mul, dtype=np.int32)
        if add.ndim != 2 or add.shape[0] != add.shape[1]:
            raise ValueError("addition table must be square")
        n = add.shape[0]
        limit = element_cap() if cap is None else cap
        if n > limit:
            raise CapExceeded(f"ring would have {n} elements, cap is {limit}")
        if mul.shape != (n, n):
            raise ValueError("multiplication table shape does not match")
        if n < 2:
            raise ValueError("a ring needs at least the two elements 0 and 1")
        for t, name in ((add, "add"), (mul, "mul")):
            if t.min() < 0 or t.max() >= n:
                raise ValueError(f"{name} table has entries outside 0..{n - 1}")
        if not (0 <= zero < n and 0 <= one < n):
            raise ValueError("zero/one index out of range")
        if zero == one:
            raise ValueError("one == zero: the zero ring is not admitted")

        self.size = n
        self.add = add
        self.mul = mul
        self.zero = int(zero)
        self.one = int(one)
        self.provenance = provenance

        _verify_ring(self)

        self.neg = (add == self.zero).argmax(axis=1).astype(np.int32)
        self.unit_mask = (mul == self.one).any(axis=1)
        self.units = frozenset(int(u) for u in np.flatnonzero(self.unit_mask))
        self.nonunits = np.flatnonzero(~self.unit_mask).astype(np.int32)

        # a finite commutative ring has no regular nonunits; checking the
        # scan result against the unit scan guards both computations
        regular = (mul == self.zero).sum(axis=1) == 1
        if not np.array_equal(regular, self.unit_mask):
            raise ValueError("regular elements disagree with units; tables corrupt")

        add.setflags(write=False)
        mul.setflags(write=False)
        self.neg.setflags(write=False)
        self.unit_mask.setflags(write=False)
        self.nonunits.setflags(write=False)

    @property
    def text(self) -> str:
        return ex.print_expr(self.provenance)

    def is_unit(self, a: int) -> bool:
        return bool(self.unit_mask[a])

    def __repr__(self) -> str:
        return f"FiniteRing({self.text}, size={self.size})"


def additive_generators(add: np.ndarray, zero: int) -> list[int]:
    """Greedy additive generating set: repeatedly adjoin the least element
    outside the current span. Safe on corrupt tables (cycle detection),
    and |result| <= log2(n) on genuine groups."""
    n = add.shape[0]
    span = np.zeros(n, dtype=bool)
    span[zero] = True
    gens: list[int] = []
    while not span.all():
        g = int(np.argmin(span))
        gens.append(g)
        mults = [zero]
        seen = {zero}
        cur = g
        while cur not in seen:
            mults.append(cur)
            seen.add(cur)
            cur = int(add[cur, g])
        span_idx = np.flatnonzero(span)
        reach = add[np.ix_(span_idx, np.asarray(mults, dtype=np.intp))]
        new_span = np.zeros(n, dtype=bool)
        new_span[reach.ravel()] = True
        new_span[g] = True
        if not new_span[span_idx].all():
            # zero stopped acting as identity somewhere; the identity
            # check below reports it, but never loop on a corrupt table
            new_span |= span
        span = new_span
    return gens


def _verify_ring(r: FiniteRing) -> None:
    add, mul, n = r.add, r.mul, r.size
    idx = np.arange(n)

    if not np.array_equal(add, add.T):
        x, y = np.argwhere(add != add.T)[0]
        raise ValueError(f"+ not commutative at ({x}, {y})")
    if not np.array_equal(mul, mul.T):
        x, y = np.argwhere(mul != mul.T)[0]
        raise ValueError(f"* not commutative at ({x}, {y})")
    if not np.array_equal(add[r.zero], idx):
        raise ValueError("0 is not an additive identity")
    if not np.array_equal(mul[r.one], idx):
        raise ValueError("1 is not a multiplicative identity")
    if not (add == r.zero).any(axis=1).all():
        a = int(np.argmin((add == r.zero).any(axis=1)))
        raise ValueError(f"element {a} has no additive inverse")
    if not (mul[r.zero] == r.zero).all():
        raise ValueError("0 * x != 0 for some x")

    gens = additive_generators(add, r.zero)
    for g in gens:
        # Light's test slice for +: (x+g)+y == x+(g+y)
        if not np.array_equal(add[add[:, g]], add[:, add[g]]):
            x, y = np.argwhere(add[add[:, g]] != add[:, add[g]])[0]
            raise ValueError(f"+ not associative at ({x}, {g}, {y})")
        # (g*y)*z == g*(y*z); extends to all x by distributivity
        if not np.array_equal(mul[mul[g]], mul[g][mul]):
            y, z = np.argwhere(mul[mul[g]] != mul[g][mul])[0]
            raise ValueError(f"* not associative at ({g}, {y}, {z})")
        # a*(g+x) == a*g + a*x for every a, x
        lhs = mul[:, add[g]]
        rhs = add[mul[:, g][:, None], mul]
        if not np.array_equal(lhs, rhs):
            a, x = np.argwhere(lhs != rhs)[0]
            raise ValueError(f"* not distributive at ({a}, {g}, {x})")

    if n <= _LITERAL_SCAN_MAX:
        _verify_triples_literal(add, mul)


def _verify_triples_literal(add: np.ndarray, mul: np.ndarray) -> None:
    # brute-force cubes; only run for small rings
    if not np.array_equal(add[add], add[:, add]):
        x, y, z = np.argwhere(add[add] != add[:, add])[0]
        raise ValueError(f"+ not associative at ({x}, {y}, {z})")
    if not np.array_equal(mul[mul], mul[:, mul]):
        x, y, z = np.argwhere(mul[mul] != mul[:, mul])[0]
        raise ValueError(f"* not associative at ({x}, {y}, {z})")
    lhs = mul[:, add]
    rhs = add[mul[:, :, None], mul[:, None, :]]
    if not np.array_equal(lhs, rhs):
        x, y, z = np.argwhere(lhs != rhs)[0]
        raise ValueError(f"* not distributive at ({x}, {y}, {z})")


class Homomorphism:
    """A verified unital ring homomorphism between two finite rings.

    The defining equations are checked over all pairs at construction.
    """

    def __init__(self, source: FiniteRing, target: FiniteRing, mapping):
        mapping = np.ascontiguousarray(mapping, dtype=np.int32)
        if mapping.shape != (source.size,):
            raise ValueError("mapping must assign every source element")
        if mapping.min() < 0 or mapping.max() >= target.size:
            raise ValueError("mapping has values outside the target ring")
        f = mapping
        if int(f[source.one]) != target.one:
            raise ValueError("homomorphism must send 1 to 1")
        if int(f[source.zero]) != target.zero:
            raise ValueError("homomorphism must send 0 to 0")
        if not np.array_equal(f[source.add], target.add[np.ix_(f, f)]):
            a, b = np.argwhere(f[source.add] != target.add[np.ix_(f, f)])[0]
            raise ValueError(f"f(a+b) != f(a)+f(b) at ({a}, {b})")
        if not np.array_equal(f[source.mul], target.mul[np.ix_(f, f)]):
            a, b = np.argwhere(f[source.mul] != target.mul[np.ix_(f, f)])[0]
            raise ValueError(f"f(a*b) != f(a)*f(b) at ({a}, {b})")
        self.source = source
        self.target = target
        self.mapping = f
        self.mapping.setflags(write=False)
        self.kernel = tuple(int(a) for a in np.flatnonzero(f == target.zero))
        self.image = tuple(sorted(int(v) for v in set(f.tolist())))

    @property
    def is_injective(self) -> bool:
        return len(set(self.mapping.tolist())) == self.source.size

    @property
    def is_surjective(self) -> bool:
        return len(self.image) == self.target.size

    @property
    def preserves_nonunits(self) -> bool:
        """True when every nonunit maps to a nonunit."""
        return not self.target.unit_mask[self.mapping[self.source.nonunits]].any()

    def __repr__(self) -> str:
        return f"Homomorphism({self.source.text} -> {self.target.text})"


# ---------------------------------------------------------------------------
# constructors


def make_zn(n: int, cap: int | None = None) -> FiniteRing:
    """The ring of integers modulo n, elements 0..n-1."""
    if n < 2:
        raise ValueError("Z_n needs n >= 2")
    limit = element_cap() if cap is None else cap
    if n > limit:
        raise CapExceeded(f"ring would have {n} elements, cap is {limit}")
    idx = np.arange(n, dtype=np.int64)
    add = (idx[:, None] + idx[None, :]) % n
    mul = (idx[:, None] * idx[None, :]) % n
    return FiniteRing(add, mul, 0, 1, ex.Zn(n), cap=cap)


def make_product(r1: FiniteRing, r2: FiniteRing, cap: int | None = None) -> FiniteRing:
    """Direct product; element (a, b) is stored at index a*r2.size + b."""
    s1, s2 = r1.size, r2.size
    n = s1 * s2
    limit = element_cap() if cap is None else cap
    if n > limit:
        raise CapExceeded(f"ring would have {n} elements, cap is {limit}")
    add = (r1.add.astype(np.int64)[:, None, :, None] * s2
           + r2.add[None, :, None, :]).reshape(n, n)
    mul = (r1.mul.astype(np.int64)[:, None, :, None] * s2
           + r2.mul[None, :, None, :]).reshape(n, n)
    zero = r1.zero * s2 + r2.zero
    one = r1.one * s2 + r2.one
    prov = ex.Product(r1.provenance, r2.provenance)
    ring = FiniteRing(add, mul, zero, one, prov, cap=cap)
    ring.left_factor = r1
    ring.right_factor = r2
    return ring


def make_quotient(r: FiniteRing, q: "Ideal",
                  cap: int | None = None) -> tuple[FiniteRing, Homomorphism]:
    """Quotient ring r/q plus the verified projection homomorphism.

    Cosets are labelled by their least element; quotient element i is the
    i-th coset in that order. The projection's kernel is asserted to be
    exactly q.
    """
    if q.ring is not r:
        raise RingMismatch("ideal belongs to a different ring")
    if len(q.elements) == r.size:
        raise ImproperIdeal("cannot quotient by the whole ring (zero ring)")
    q_arr = np.asarray(q.elements, dtype=np.intp)
    rep = r.add[:, q_arr].min(axis=1)
    reps = np.unique(rep)
    k = len(reps)
    rank = np.full(r.size, -1, dtype=np.int32)
    rank[reps] = np.arange(k, dtype=np.int32)
    proj = rank[rep]
    q_add = proj[r.add[np.ix_(reps, reps)]]
    q_mul = proj[r.mul[np.ix_(reps, reps)]]
    lits = tuple(element_literal(r, g) for g in q.generators)
    prov = ex.Quotient(r.provenance, lits)
    ring = FiniteRing(q_add, q_mul, int(proj[r.zero]), int(proj[r.one]), prov, cap=cap)
    hom = Homomorphism(r, ring, proj)
    if hom.kernel != q.elements:
        raise ValueError("projection kernel disagrees with the quotienting ideal")
    return ring, hom


def make_localization(r: FiniteRing, s: Iterable[int],
                      cap: int | None = None) -> tuple[FiniteRing, Homomorphism]:
    """Localization S^-1 r by explicit pair equivalence.

    Pairs (a, t) with t in S, where (a, t) ~ (b, u) iff v*(a*u - b*t) = 0
    for some v in S. Returns the localized ring and the verified
    canonical map a -> a/1. The kernel of the map is asserted to be
    {a : s*a = 0 for some s in S}, and the image of every element of S
    is asserted to be a unit.
    """
    s_idx = np.asarray(sorted({int(a) for a in s}), dtype=np.intp)
    if len(s_idx) == 0:
        raise NotMultClosed("S is empty")
    if (s_idx < 0).any() or (s_idx >= r.size).any():
        raise ValueError("S contains indices outside the ring")
    if r.zero in s_idx:
        raise ZeroInS("S contains 0")
    if r.one not in s_idx:
        raise NotMultClosed("S does not contain 1")
    in_s = np.zeros(r.size, dtype=bool)
    in_s[s_idx] = True
    prods = r.mul[np.ix_(s_idx, s_idx)]
    if not in_s[prods].all():
        a, b = np.argwhere(~in_s[prods])[0]
        raise NotMultClosed(
            f"{s_idx[a]}*{s_idx[b]} = {prods[a, b]} is not in S")

    ns = len(s_idx)
    m = r.size * ns
    if m > 8192:
        raise CapExceeded(
            f"localization pair table would have {m}^2 entries; "
            "shrink the ring or the multiplicative set")
    a_vec = np.repeat(np.arange(r.size, dtype=np.intp), ns)
    t_vec = np.tile(s_idx, r.size)
    s_pos = np.full(r.size, -1, dtype=np.intp)
    s_pos[s_idx] = np.arange(ns)

    # d is killable iff some v in S annihilates it
    kill = (r.mul[s_idx] == r.zero).any(axis=0)

    term = r.mul[a_vec[:, None], t_vec[None, :]]      # [p, q] = a_p * t_q
    diff = r.add[term, r.neg[term.T]]
    eq = kill[diff]                                    # pair equivalence
    if not (eq.T == eq).all() or not eq.diagonal().all():
        raise ValueError("pair equivalence failed to be symmetric/reflexive")
    cls_rep = eq.argmax(axis=1)                        # least equivalent pair
    if not (cls_rep[cls_rep] == cls_rep).all():
        raise ValueError("pair equivalence failed to be transitive")
    reps = np.unique(cls_rep)
    k = len(reps)
    limit = element_cap() if cap is None else cap
    if k > limit:
        raise CapExceeded(f"ring would have {k} elements, cap is {limit}")
    rank = np.full(m, -1, dtype=np.int32)
    rank[reps] = np.arange(k, dtype=np.int32)
    pair_class = rank[cls_rep]

    ra = a_vec[reps]
    rt = t_vec[reps]
    num = r.add[r.mul[ra[:, None], rt[None, :]], r.mul[ra[None, :], rt[:, None]]]
    den = r.mul[rt[:, None], rt[None, :]]
    den_pos = s_pos[den]
    q_add = pair_class[num.astype(np.int64) * ns + den_pos]
    q_mul = pair_class[r.mul[ra[:, None], ra[None, :]].astype(np.int64) * ns + den_pos]

    one_pos = int(s_pos[r.one])
    zero_c = int(pair_class[r.zero * ns + one_pos])
    one_c = int(pair_class[r.one * ns + one_pos])
    lits = tuple(element_literal(r, int(a)) for a in s_idx)
    prov = ex.Localize(r.provenance, lits)
    ring = FiniteRing(q_add, q_mul, zero_c, one_c, prov, cap=cap)

    can = pair_class[np.arange(r.size, dtype=np.int64) * ns + one_pos]
    hom = Homomorphism(r, ring, can)
    if not ring.unit_mask[can[s_idx]].all():
        raise ValueError("some element of S fails to become a unit")
    expected_kernel = tuple(int(a) for a in np.flatnonzero(kill))
    if hom.kernel != expected_kernel:
        raise ValueError("canonical map kernel disagrees with {a : sa = 0}")
    return ring, hom


def make_idealization(r: FiniteRing, j: "Ideal", cap: int | None = None) -> FiniteRing:
    """Trivial extension of r by the cyclic module M = r/j.

    Elements are pairs (a, m) with m a coset of j, stored at index
    a*|M| + m; (a, m)*(b, m') = (ab, a m' + b m). The computed unit set
    is asserted to be exactly {(a, m) : a is a unit}.
    """
    if j.ring is not r:
        raise RingMismatch("ideal belongs to a different ring")
    j_arr = np.asarray(j.elements, dtype=np.intp)
    rep = r.add[:, j_arr].min(axis=1)
    mreps = np.unique(rep)
    k = len(mreps)
    n = r.size * k
    limit = element_cap() if cap is None else cap
    if n > limit:
        raise CapExceeded(f"ring would have {n} elements, cap is {limit}")
    mrank = np.full(r.size, -1, dtype=np.int32)
    mrank[mreps] = np.arange(k, dtype=np.int32)
    to_m = mrank[rep]                                  # module coset rank
    madd = to_m[r.add[np.ix_(mreps, mreps)]]
    act = to_m[r.mul[:, mreps]]                        # act[a, m] = rank(a*m)

    add = (r.add.astype(np.int64)[:, None, :, None] * k
           + madd[None, :, None, :]).reshape(n, n)
    first = r.mul.astype(np.int64)[:, None, :, None] * k
    second = madd[act[:, None, None, :], act.T[None, :, :, None]]
    mul = (first + second).reshape(n, n)

    m_zero = int(to_m[r.zero])
    zero = r.zero * k + m_zero
    one = r.one * k + m_zero
    lits = tuple(element_literal(r, g) for g in j.generators)
    prov = ex.Idealize(r.provenance, lits)
    ring = FiniteRing(add, mul, zero, one, prov, cap=cap)

    expected_units = r.unit_mask[np.arange(n) // k]
    if not np.array_equal(ring.unit_mask, expected_units):
        raise ValueError("idealization units differ from {(a, m) : a unit}")
    ring.module_size = k
    ring.module_action = act
    ring.module_zero = m_zero
    ring.base_ring = r
    return ring


def make_local_algebra(p: int, cap: int | None = None) -> FiniteRing:
    """k[X, Y]/(X^2, XY, Y^2) over the field with p elements.

    Element a + b*x + c*y is stored at index a*p^2 + b*p + c, so x sits
    at index p and y at index 1.
    """
    if p < 2 or any(p % d == 0 for d in range(2, int(p ** 0.5) + 1)):
        raise NotPrime(f"{p} is not prime")
    n = p ** 3
    limit = element_cap() if cap is None else cap
    if n > limit:
        raise CapExceeded(f"ring would have {n} elements, cap is {limit}")
    idx = np.arange(n, dtype=np.int64)
    a, b, c = idx // p ** 2, (idx // p) % p, idx % p
    add = (((a[:, None] + a) % p) * p ** 2
           + ((b[:, None] + b) % p) * p
           + (c[:, None] + c) % p)
    mul = ((a[:, None] * a) % p * p ** 2
           + (a[:, None] * b + b[:, None] * a) % p * p
           + (a[:, None] * c + c[:, None] * a) % p)
    return FiniteRing(add, mul, 0, p ** 2, ex.LocalAlg(p), cap=cap)


# ---------------------------------------------------------------------------
# element literals: the pairing structure mirrors the construction tree


def element_literal(r: FiniteRing, index: int) -> ex.Literal:
    """Literal form of an element index, following the provenance tree."""
    e = r.provenance
    if isinstance(e, ex.Product):
        right_size = _expr_size(e.right)
        a, b = divmod(int(index), right_size)
        return (_sub_literal(e.left, a), _sub_literal(e.right, b))
    if isinstance(e, ex.Idealize):
        k = r.module_size
        a, m = divmod(int(index), k)
        return (_sub_literal(e.ring, a), m)
    return int(index)


def _expr_size(e: ex.RingExpr) -> int:
    if isinstance(e, ex.Zn):
        return e.n
    if isinstance(e, ex.LocalAlg):
        return e.p ** 3
    if isinstance(e, ex.Product):
        return _expr_size(e.left) * _expr_size(e.right)
    # quotient / localization / idealization sizes are not derivable from
    # the expression alone; callers that need them hold the built ring
    raise ValueError(f"size of {e!r} is not syntactically determined")


def _sub_literal(e: ex.RingExpr, index: int) -> ex.Literal:
    if isinstance(e, ex.Product):
        right_size = _expr_size(e.right)
        a, b = divmod(int(index), right_size)
        return (_sub_literal(e.left, a), _sub_literal(e.right, b))
    return int(index)


def additive_order(r: FiniteRing, a: int) -> int:
    k, cur = 1, int(a)
    while cur != r.zero:
        cur = int(r.add[cur, a])
        k += 1
    return k


# ---------------------------------------------------------------------------
# isomorphism search


def _ring_closure(r: FiniteRing, seed: set[int]) -> set[int]:
    span = set(seed)
    frontier = list(span)
    while frontier:
        fresh: set[int] = set()
        cur = np.asarray(sorted(span), dtype=np.intp)
        new = np.asarray(sorted(set(frontier)), dtype=np.intp)
        for table in (r.add, r.mul):
            fresh.update(int(v) for v in table[np.ix_(cur, new)].ravel())
        fresh -= span
        span |= fresh
        frontier = list(fresh)
    return span


def _ring_generators(r: FiniteRing) -> list[int]:
    span = _ring_closure(r, {r.zero, r.one})
    gens: list[int] = []
    while len(span) < r.size:
        g = min(set(range(r.size)) - span)
        gens.append(g)
        span = _ring_closure(r, span | {g})
    return gens


def find_isomorphism(r1: FiniteRing, r2: FiniteRing) -> Homomorphism | None:
    """Deterministic unital ring isomorphism search, or None.

    Generators of r1 are chosen greedily (least element not yet
    generated); candidate images are tried in ascending order, so the
    first isomorphism found is lexicographically least with respect to
    the generator-image sequence.
    """
    if max(r1.size, r2.size) > ISO_SEARCH_CAP:
        raise SearchCapExceeded(
            f"isomorphism search capped at {ISO_SEARCH_CAP} elements")
    if r1.size != r2.size or len(r1.units) != len(r2.units):
        return None
    ord1 = [additive_order(r1, a) for a in range(r1.size)]
    ord2 = [additive_order(r2, a) for a in range(r2.size)]
    if sorted(ord1) != sorted(ord2):
        return None

    gens = _ring_generators(r1)
    base = np.full(r1.size, -1, dtype=np.int32)

    def close(mapping: np.ndarray, queue: list[int]) -> bool:
        # propagate f over sums and products of already mapped elements
        while queue:
            a = queue.pop()
            known = np.flatnonzero(mapping >= 0)
            for t1, t2 in ((r1.add, r2.add), (r1.mul, r2.mul)):
                src = t1[a, known]
                dst = t2[mapping[a], mapping[known]]
                for s_el, d_el in zip(src.tolist(), dst.tolist()):
                    cur = mapping[s_el]
                    if cur < 0:
                        mapping[s_el] = d_el
                        queue.append(s_el)
                    elif cur != d_el:
                        return False
        return True

    mapping = base.copy()
    mapping[r1.zero] = r2.zero
    mapping[r1.one] = r2.one
    if not close(mapping, [r1.zero, r1.one]):
        return None

    def candidates(g: int, mapping: np.ndarray) -> list[int]:
        used = set(mapping[mapping >= 0].tolist())
        want_unit = bool(r1.unit_mask[g])
        return [h for h in range(r2.size)
                if h not in used
                and ord2[h] == ord1[g]
                and bool(r2.unit_mask[h]) == want_unit]

    def extend(mapping: np.ndarray, todo: list[int]) -> np.ndarray | None:
        todo = [g for g in todo if mapping[g] < 0]
        if not todo:
            return mapping if (mapping >= 0).all() else None
        g, rest = todo[0], todo[1:]
        for h in candidates(g, mapping):
            trial = mapping.copy()
            trial[g] = h
            if close(trial, [g]):
                out = extend(trial, rest)
                if out is not None:
                    return out
        return None

    final = extend(mapping, gens)
    if final is None:
        return None
    if len(set(final.tolist())) != r1.size:
        return None
    return Homomorphism(r1, r2, final)
