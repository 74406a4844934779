"""(I, J̄)-forests and trees, linear (mode A) and cyclic (mode B).

An arc (i, j) joins the plain element i to the barred element j̄.  In
mode A arcs must be increasing (i ≤ j); in mode B any (i, j) ∈ I × J is
allowed and crossings are read on the cycle Z/(n+1).  Maximal
non-crossing arc sets are exactly the spanning trees of the complete
bipartite graph on I ⊔ J̄, and flips exchange one arc for the unique
other arc completing the same ridge.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .core import Arc, IndexPair, I_SIDE, J_SIDE, Node

Tree = tuple[Arc, ...]


def crosses_linear(a: Arc, b: Arc) -> bool:
    """Arcs cross iff i ≺ i′ ≺ j̄ ≺ j̄′ in the order 0 ≺ 0̄ ≺ 1 ≺ 1̄ ≺ ..."""
    i, j = a
    i2, j2 = b
    return (i < i2 <= j < j2) or (i2 < i <= j2 < j)


def arc_length(a: Arc, n: int) -> int:
    """Cyclic length (j − i) mod (n+1); 0 for the arc (i, ī)."""
    return (a[1] - a[0]) % (n + 1)


def crosses_cyclic(a: Arc, b: Arc, n: int) -> bool:
    """Crossing on the cycle: some endpoint lies strictly inside the other arc."""
    mod = n + 1
    i, j = a
    i2, j2 = b
    l1 = (j - i) % mod
    l2 = (j2 - i2) % mod
    x = (j - i2) % mod
    y = (j2 - i) % mod
    return (x < l1 and x < l2) or (y < l1 and y < l2)


def crosses(a: Arc, b: Arc, mode: str = "A", n: int = 0) -> bool:
    if mode == "A":
        return crosses_linear(a, b)
    return crosses_cyclic(a, b, n)


def ground_arcs(p: IndexPair) -> tuple[Arc, ...]:
    """All allowed arcs of the pair, lexicographically sorted."""
    if p.mode == "A":
        return tuple((i, j) for i in p.I for j in p.J if i <= j)
    return tuple((i, j) for i in p.I for j in p.J)


@dataclass(frozen=True)
class PairContext:
    """Ground arcs of a pair with bitmask compatibility rows."""

    pair: IndexPair
    ground: tuple[Arc, ...]
    index: dict[Arc, int]
    compat: tuple[int, ...]  # compat[k] = mask of arcs non-crossing with ground[k]
    full: int


@lru_cache(maxsize=None)
def context(p: IndexPair) -> PairContext:
    ground = ground_arcs(p)
    G = len(ground)
    compat = []
    for k, a in enumerate(ground):
        m = 0
        for l, b in enumerate(ground):
            if l != k and not crosses(a, b, p.mode, p.n):
                m |= 1 << l
        compat.append(m)
    index = {a: k for k, a in enumerate(ground)}
    return PairContext(p, ground, index, tuple(compat), (1 << G) - 1)


def classify(p: IndexPair, arcs) -> str:
    """One of "NotForest", "Forest", "Tree" for an arbitrary arc set."""
    arcs = tuple(sorted(set(map(tuple, arcs))))
    ctx = context(p)
    for a in arcs:
        if a not in ctx.index:
            raise ValueError(f"arc {a} is not an arc of the pair {p.label()}")
    for s, a in enumerate(arcs):
        for b in arcs[s + 1 :]:
            if crosses(a, b, p.mode, p.n):
                return "NotForest"
    # non-crossing sets are acyclic as bipartite graphs, but check honestly
    parent: dict[Node, Node] = {}

    def find(x: Node) -> Node:
        while parent.setdefault(x, x) != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, j in arcs:
        a, b = find((i, I_SIDE)), find((j, J_SIDE))
        if a == b:
            return "NotForest"
        parent[a] = b
    roots = {find(v) for v in p.nodes()}
    return "Tree" if len(roots) == 1 else "Forest"


def component_count(p: IndexPair, arcs) -> int:
    """Number of connected components of (I ⊔ J̄, arcs), isolated nodes included."""
    parent: dict[Node, Node] = {}

    def find(x: Node) -> Node:
        while parent.setdefault(x, x) != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, j in arcs:
        a, b = find((i, I_SIDE)), find((j, J_SIDE))
        if a != b:
            parent[a] = b
    return len({find(v) for v in p.nodes()})


def enumerate_trees(p: IndexPair) -> tuple[Tree, ...]:
    """All (I, J̄)-trees of the pair in lexicographic arc-list order."""
    p.require_standing()
    ctx = context(p)
    need = p.size - 1
    out: list[Tree] = []
    chosen: list[int] = []

    def rec(cand: int) -> None:
        if len(chosen) == need:
            out.append(tuple(ctx.ground[k] for k in chosen))
            return
        m = cand
        while m:
            b = m & -m
            k = b.bit_length() - 1
            m ^= b
            if len(chosen) + 1 + m.bit_count() < need:
                break
            chosen.append(k)
            rec(m & ctx.compat[k])
            chosen.pop()

    rec(ctx.full)
    return tuple(out)


def face_counts(p: IndexPair) -> list[int]:
    """face_counts(p)[k] = number of non-crossing arc sets of cardinality k."""
    p.require_standing()
    ctx = context(p)
    counts = [0] * (p.size + 1)
    counts[0] = 1

    def rec(cand: int, depth: int) -> None:
        m = cand
        while m:
            b = m & -m
            k = b.bit_length() - 1
            m ^= b
            counts[depth + 1] += 1
            rec(m & ctx.compat[k], depth + 1)

    rec(ctx.full, 0)
    return counts[: p.size]


def enumerate_faces(p: IndexPair) -> tuple[Tree, ...]:
    """All non-crossing arc sets (faces of the flag complex), the empty one first."""
    p.require_standing()
    ctx = context(p)
    out: list[Tree] = [()]
    chosen: list[int] = []

    def rec(cand: int) -> None:
        m = cand
        while m:
            b = m & -m
            k = b.bit_length() - 1
            m ^= b
            chosen.append(k)
            out.append(tuple(ctx.ground[k] for k in chosen))
            rec(m & ctx.compat[k])
            chosen.pop()

    rec(ctx.full)
    return tuple(out)


def t_min(p: IndexPair) -> Tree:
    """The minimal tree: every i hooked to its nearest j̄, plus the full min-I fan."""
    if p.mode != "A":
        raise ValueError("t_min is defined in the linear setting")
    p.require_standing()
    arcs = {(p.I[0], j) for j in p.J}
    for i in p.I:
        arcs.add((i, min(j for j in p.J if j >= i)))
    return tuple(sorted(arcs))


# ---------------------------------------------------------------------------
# flips


@dataclass(frozen=True)
class FlipRecord:
    out_arc: Arc
    in_arc: Arc
    increasing: bool


def flips(p: IndexPair, t: Tree) -> tuple[FlipRecord, ...]:
    """All flips available at the tree t, in out-arc order.

    Removing an arc leaves a ridge contained in at most one other tree;
    pendant arcs (and the (min, max) arc in mode A) admit none.
    """
    ctx = context(p)
    idxs = [ctx.index[a] for a in t]
    m = len(idxs)
    tmask = 0
    for k in idxs:
        tmask |= 1 << k
    pre = [ctx.full] * (m + 1)
    suf = [ctx.full] * (m + 1)
    for s in range(m):
        pre[s + 1] = pre[s] & ctx.compat[idxs[s]]
    for s in range(m - 1, -1, -1):
        suf[s] = suf[s + 1] & ctx.compat[idxs[s]]
    recs = []
    for pos, k in enumerate(idxs):
        cand = pre[pos] & suf[pos + 1] & ~tmask
        if not cand:
            continue
        if cand.bit_count() > 1:
            raise RuntimeError(f"ridge of {t} completes in more than two trees")
        f = ctx.ground[cand.bit_length() - 1]
        e = ctx.ground[k]
        recs.append(FlipRecord(e, f, _flip_increasing(p, e, f)))
    return tuple(recs)


def _flip_increasing(p: IndexPair, e: Arc, f: Arc) -> bool:
    if p.mode == "A":
        if not ((f[0] > e[0] and f[1] > e[1]) or (f[0] < e[0] and f[1] < e[1])):
            raise RuntimeError(f"flip {e} -> {f} moves endpoints in opposite directions")
        return f[0] > e[0]
    if f[0] == e[0]:
        raise RuntimeError(f"cyclic flip {e} -> {f} keeps the plain endpoint")
    return f[0] > e[0]


def apply_flip(t: Tree, rec: FlipRecord) -> Tree:
    if rec.out_arc not in t:
        raise ValueError(f"arc {rec.out_arc} not in tree")
    return tuple(sorted(set(t) - {rec.out_arc} | {rec.in_arc}))


def increasing_flips(p: IndexPair, t: Tree) -> tuple[FlipRecord, ...]:
    return tuple(r for r in flips(p, t) if r.increasing)


# ---------------------------------------------------------------------------
# canopy, leaf deletion, completion ([n], [n̄]) machinery


def degrees(p: IndexPair, t: Tree) -> dict[Node, int]:
    deg = {v: 0 for v in p.nodes()}
    for i, j in t:
        deg[(i, I_SIDE)] += 1
        deg[(j, J_SIDE)] += 1
    return deg


def _require_full_pair(p: IndexPair) -> int:
    n = p.n
    if p.mode != "A" or p.I != tuple(range(n + 1)) or p.J != tuple(range(n + 1)):
        raise ValueError("expected the full pair ([n], [n̄])")
    return n


def canopy(p: IndexPair, t: Tree) -> IndexPair:
    """The canopy of an ([n], [n̄])-tree: per pair {k, k̄} keep the non-leaf."""
    n = _require_full_pair(p)
    if n == 0:
        return IndexPair((0,), (0,), "A")
    deg = degrees(p, t)
    I, J = [], []
    for k in range(n + 1):
        plain_leaf = deg[(k, I_SIDE)] == 1
        barred_leaf = deg[(k, J_SIDE)] == 1
        if plain_leaf == barred_leaf:
            raise ValueError(f"not a tree of ([{n}], [{n}̄]): pair {k} has {plain_leaf=}")
        if plain_leaf:
            J.append(k)
        else:
            I.append(k)
    return IndexPair(tuple(I), tuple(J), "A")


def leaf_deletion(p: IndexPair, t: Tree) -> tuple[IndexPair, Tree]:
    """One round of leaf deletion; returns (canopy pair, tree on it)."""
    n = _require_full_pair(p)
    can = canopy(p, t)
    if n == 0:
        return can, t
    keep_plain = set(can.I)
    keep_barred = set(can.J)
    rest = tuple(sorted((i, j) for i, j in t if i in keep_plain and j in keep_barred))
    if len(rest) != can.size - 1:
        raise RuntimeError("leaf deletion did not produce a spanning tree")
    return can, rest


def complete_tree(sub: IndexPair, t: Tree, n: int) -> Tree:
    """Inverse of leaf deletion on the fiber minimum side: add every arc (k, k̄).

    sub must partition {0..n} between I and J̄; the added arcs cross
    nothing, and deleting the new leaves recovers t.
    """
    if sub.mode != "A" or sorted(sub.I + sub.J) != list(range(n + 1)):
        raise ValueError("expected a partition pair of {0..n}")
    return tuple(sorted(set(t) | {(k, k) for k in range(n + 1)}))


# ---------------------------------------------------------------------------
# the staircase triangulation (independent facet-count oracle, mode A)


def staircase_trees(p: IndexPair) -> tuple[Tree, ...]:
    """Facets of the staircase triangulation restricted to increasing cells.

    Monotone walks on the I × J grid from (min I, min J̄) to
    (max I, max J̄) whose every cell (i, j̄) is increasing.  Their number
    equals the number of trees of the pair, though the two
    triangulations differ.
    """
    if p.mode != "A":
        raise ValueError("the staircase oracle is for the linear setting")
    p.require_standing()
    I, J = p.I, p.J
    out: list[Tree] = []
    acc: list[Arc] = []

    def rec(ii: int, jj: int) -> None:
        acc.append((I[ii], J[jj]))
        if ii == len(I) - 1 and jj == len(J) - 1:
            out.append(tuple(sorted(acc)))
        else:
            if ii + 1 < len(I) and I[ii + 1] <= J[jj]:
                rec(ii + 1, jj)
            if jj + 1 < len(J):
                rec(ii, jj + 1)
        acc.pop()

    rec(0, 0)
    return tuple(out)
