"""Finite posets from increasing flips (trees) and rotations (paths):
construction, lattice checks, canopy fibers, reverse duality, DOT export."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

from .core import IndexPair, nu_of_pair, reverse_pair
from .paths import NuContext, covers_of, enumerate_paths_above, rho
from .trees import Tree, apply_flip, canopy, enumerate_trees, increasing_flips, leaf_deletion


@dataclass
class FinitePoset:
    """Elements in a fixed canonical order plus the Hasse diagram.

    covers_up[i] lists indices j with elements[i] ⋖ elements[j]; up/down
    reachability masks are computed lazily.
    """

    elements: tuple
    covers_up: tuple[tuple[int, ...], ...]
    _up: Optional[tuple[int, ...]] = field(default=None, repr=False)
    _down: Optional[tuple[int, ...]] = field(default=None, repr=False)

    def __len__(self) -> int:
        return len(self.elements)

    def index(self, x) -> int:
        return self.elements.index(x)

    def up_masks(self) -> tuple[int, ...]:
        if self._up is None:
            n = len(self.elements)
            up = [0] * n
            state = [0] * n  # 0 new, 1 active, 2 done

            def visit(v: int) -> None:
                stack = [v]
                while stack:
                    u = stack[-1]
                    if state[u] == 0:
                        state[u] = 1
                        for w in self.covers_up[u]:
                            if state[w] == 0:
                                stack.append(w)
                    else:
                        stack.pop()
                        if state[u] == 1:
                            m = 1 << u
                            for w in self.covers_up[u]:
                                m |= up[w]
                            up[u] = m
                            state[u] = 2

            for v in range(n):
                visit(v)
            self._up = tuple(up)
        return self._up

    def down_masks(self) -> tuple[int, ...]:
        if self._down is None:
            n = len(self.elements)
            down = [1 << i for i in range(n)]
            up = self.up_masks()
            for i in range(n):
                m = up[i]
                while m:
                    b = m & -m
                    down[b.bit_length() - 1] |= 1 << i
                    m ^= b
            self._down = tuple(down)
        return self._down

    def leq(self, i: int, j: int) -> bool:
        return bool(self.up_masks()[i] & (1 << j))

    def cover_pairs(self) -> tuple[tuple[int, int], ...]:
        return tuple((i, j) for i in range(len(self.elements)) for j in self.covers_up[i])

    def minima(self) -> tuple[int, ...]:
        down = self.down_masks()
        return tuple(i for i in range(len(self.elements)) if down[i] == 1 << i)

    def maxima(self) -> tuple[int, ...]:
        return tuple(i for i, c in enumerate(self.covers_up) if not c)

    def validate_hasse(self) -> None:
        """Covers must not shortcut: no i ⋖ j with i < k < j for some k."""
        up = self.up_masks()
        for i, cs in enumerate(self.covers_up):
            for j in cs:
                for k in cs:
                    if k != j and up[k] & (1 << j):
                        raise ValueError(f"cover {i} -> {j} shortcuts through {k}")


def from_cover_pairs(elements, pairs) -> FinitePoset:
    idx = {x: k for k, x in enumerate(elements)}
    ups: list[set[int]] = [set() for _ in elements]
    for a, b in pairs:
        ups[idx[a]].add(idx[b])
    P = FinitePoset(tuple(elements), tuple(tuple(sorted(s)) for s in ups))
    P.validate_hasse()
    return P


def build_tree_poset(p: IndexPair) -> FinitePoset:
    """The (cyclic) ν-Tamari relation: covers are the increasing flips."""
    trees = enumerate_trees(p)
    idx = {t: k for k, t in enumerate(trees)}
    ups = []
    for t in trees:
        ups.append(tuple(sorted(idx[apply_flip(t, r)] for r in increasing_flips(p, t))))
    P = FinitePoset(trees, tuple(ups))
    P.validate_hasse()
    return P


def build_path_poset(nu: str) -> FinitePoset:
    """The ν-Tamari order on paths weakly above ν, covers by rotation."""
    paths = enumerate_paths_above(nu)
    idx = {w: k for k, w in enumerate(paths)}
    ctx = NuContext.build(nu)
    ups = tuple(tuple(sorted(idx[w] for w in covers_of(ctx, mu))) for mu in paths)
    P = FinitePoset(paths, ups)
    P.validate_hasse()
    return P


# ---------------------------------------------------------------------------
# lattice property


@dataclass(frozen=True)
class LatticeReport:
    is_lattice: bool
    failure: Optional[tuple[str, int, int, tuple[int, ...]]] = None
    # (kind, x, y, offending minimal/maximal bound indices)


def lattice_check(P: FinitePoset) -> LatticeReport:
    """Check that every two elements have a join and a meet.

    The witness in a failure is the list of minimal upper (or maximal
    lower) bounds, which has length ≠ 1.
    """
    n = len(P.elements)
    up = P.up_masks()
    down = P.down_masks()
    for x in range(n):
        for y in range(x + 1, n):
            for kind, fwd, bwd in (("join", up, down), ("meet", down, up)):
                cand = fwd[x] & fwd[y]
                frontier = []
                m = cand
                while m:
                    b = m & -m
                    z = b.bit_length() - 1
                    m ^= b
                    if bwd[z] & cand == b:
                        frontier.append(z)
                if len(frontier) != 1:
                    return LatticeReport(False, (kind, x, y, tuple(frontier)))
    return LatticeReport(True)


# ---------------------------------------------------------------------------
# structural comparisons


def verify_flip_path_iso(p: IndexPair) -> bool:
    """ρ is an isomorphism from the tree poset onto the path poset of ν(I, J̄)."""
    PT = build_tree_poset(p)
    nu = nu_of_pair(p)
    PP = build_path_poset(nu)
    if len(PT) != len(PP):
        return False
    image = [rho(p, t) for t in PT.elements]
    if sorted(image) != sorted(PP.elements):
        return False
    to_path = {k: PP.index(w) for k, w in enumerate(image)}
    tree_edges = {(to_path[a], to_path[b]) for a, b in PT.cover_pairs()}
    return tree_edges == set(PP.cover_pairs())


def verify_reverse_duality(p: IndexPair) -> bool:
    """Mirroring arcs ((i,j̄) -> (n−j, n−i)) anti-isomorphs onto the reverse pair."""
    if p.mode != "A":
        raise ValueError("reverse duality is a mode A statement")
    n = p.n
    q = reverse_pair(p)
    PT = build_tree_poset(p)
    QT = build_tree_poset(q)
    if len(PT) != len(QT):
        return False

    def mirror(t: Tree) -> Tree:
        return tuple(sorted((n - j, n - i) for i, j in t))

    try:
        to_q = {k: QT.index(mirror(t)) for k, t in enumerate(PT.elements)}
    except ValueError:
        return False
    if len(set(to_q.values())) != len(PT):
        return False
    mirrored = {(to_q[b], to_q[a]) for a, b in PT.cover_pairs()}
    return mirrored == set(QT.cover_pairs())


@dataclass(frozen=True)
class FiberReport:
    canopy: IndexPair
    size: int
    interval_ok: bool
    iso_ok: bool


def canopy_fiber_report(n: int) -> tuple[bool, tuple[FiberReport, ...]]:
    """Fibers of the canopy map on ([n], [n̄])-trees: each is an interval
    isomorphic (by leaf deletion) to the tree poset of its canopy pair."""
    full = IndexPair(tuple(range(n + 1)), tuple(range(n + 1)), "A")
    P = build_tree_poset(full)
    up, down = P.up_masks(), P.down_masks()
    fibers: dict[IndexPair, list[int]] = {}
    for k, t in enumerate(P.elements):
        fibers.setdefault(canopy(full, t), []).append(k)
    reports = []
    for c in sorted(fibers, key=lambda q: (q.I, q.J)):
        idxs = fibers[c]
        mask = 0
        for k in idxs:
            mask |= 1 << k
        mins = [k for k in idxs if down[k] & mask == 1 << k]
        maxs = [k for k in idxs if up[k] & mask == 1 << k]
        interval_ok = (
            len(mins) == 1 and len(maxs) == 1 and (up[mins[0]] & down[maxs[0]]) == mask
        )
        sub = build_tree_poset(c)
        image = {}
        iso_ok = True
        for k in idxs:
            _, small = leaf_deletion(full, P.elements[k])
            if small not in sub.elements:
                iso_ok = False
                break
            image[k] = sub.index(small)
        if iso_ok:
            iso_ok = sorted(image.values()) == list(range(len(sub)))
        if iso_ok:
            fiber_edges = {
                (image[a], image[b]) for a, b in P.cover_pairs() if a in image and b in image
            }
            iso_ok = fiber_edges == set(sub.cover_pairs())
        reports.append(FiberReport(c, len(idxs), interval_ok, iso_ok))
    ok = all(r.interval_ok and r.iso_ok for r in reports) and sum(
        r.size for r in reports
    ) == len(P)
    if n >= 1:
        ok = ok and len(reports) == 2 ** (n - 1)
    return ok, tuple(reports)


# ---------------------------------------------------------------------------
# linear extensions and DOT export


def _kahn(n: int, succ: list[list[int]], indeg: list[int]) -> tuple[int, ...]:
    avail = sorted(i for i in range(n) if indeg[i] == 0)
    out: list[int] = []
    while avail:
        i = avail.pop(0)
        out.append(i)
        for j in succ[i]:
            indeg[j] -= 1
            if indeg[j] == 0:
                avail.append(j)
        avail.sort()
    if len(out) != n:
        raise RuntimeError("cover digraph is cyclic")
    return tuple(out)


def linear_extension(P: FinitePoset) -> tuple[int, ...]:
    """A linear extension of the order itself: smaller elements first,
    ties broken by canonical (index) order."""
    n = len(P.elements)
    succ = [list(c) for c in P.covers_up]
    indeg = [0] * n
    for cs in P.covers_up:
        for j in cs:
            indeg[j] += 1
    return _kahn(n, succ, indeg)


def opposite_linear_extension(P: FinitePoset) -> tuple[int, ...]:
    """A linear extension of the opposite order: larger elements first,
    ties broken by canonical (index) order."""
    n = len(P.elements)
    pending = [len(c) for c in P.covers_up]
    below: list[list[int]] = [[] for _ in range(n)]
    for i, cs in enumerate(P.covers_up):
        for j in cs:
            below[j].append(i)
    return _kahn(n, below, pending)


def to_dot(P: FinitePoset, labeler: Optional[Callable] = None, name: str = "poset") -> str:
    lab = labeler or (lambda x: str(x))
    lines = [f"digraph {name} {{", "  rankdir=BT;", '  node [shape=box, fontsize=10];']
    for k, x in enumerate(P.elements):
        text = lab(x).replace('"', r"\"")
        lines.append(f'  n{k} [label="{text}"];')
    for a, b in P.cover_pairs():
        lines.append(f"  n{a} -> n{b};")
    lines.append("}")
    return "\n".join(lines) + "\n"
