"""Lattice paths weakly above a fixed path ν, rotation covers, and the
degree-sequence bijection ρ between (I, J̄)-trees and such paths."""

from __future__ import annotations

from dataclasses import dataclass

from .core import Arc, IndexPair, J_SIDE, is_above, nu_of_pair, path_points
from .trees import Tree, crosses_linear


@dataclass(frozen=True)
class NuContext:
    """A path ν with, per height y, the largest x-coordinate on ν."""

    nu: str
    rightmost: tuple[int, ...]

    @classmethod
    def build(cls, nu: str) -> "NuContext":
        pts = path_points(nu)
        height = nu.count("N")
        rightmost = [0] * (height + 1)
        for x, y in pts:
            rightmost[y] = max(rightmost[y], x)
        return cls(nu, tuple(rightmost))


def valleys(mu: str) -> list[int]:
    """Point indices where an E step is followed by an N step."""
    return [t for t in range(1, len(mu)) if mu[t - 1] == "E" and mu[t] == "N"]


def horiz(ctx: NuContext, mu: str, t: int) -> int:
    """Horizontal distance from the t-th point of mu rightwards to ν."""
    x, y = path_points(mu)[t]
    return ctx.rightmost[y] - x


def cover_at(ctx: NuContext, mu: str, t: int) -> str:
    """Rotate mu at the valley point t: shift the block up to the next
    point at equal horizontal distance past the preceding E step."""
    if not (0 < t < len(mu) and mu[t - 1] == "E" and mu[t] == "N"):
        raise ValueError(f"point {t} of {mu} is not a valley")
    pts = path_points(mu)
    d = ctx.rightmost[pts[t][1]] - pts[t][0]
    t2 = None
    for s in range(t + 1, len(mu) + 1):
        if ctx.rightmost[pts[s][1]] - pts[s][0] == d:
            t2 = s
            break
    if t2 is None:
        raise ValueError(f"{mu} is not weakly above {ctx.nu}")
    return mu[: t - 1] + mu[t:t2] + "E" + mu[t2:]


def covers_of(ctx: NuContext, mu: str) -> tuple[str, ...]:
    """All covers of mu in the rotation order, one per valley."""
    return tuple(cover_at(ctx, mu, t) for t in valleys(mu))


def enumerate_paths_above(nu: str) -> tuple[str, ...]:
    """All paths weakly above ν with the same endpoints, lexicographically."""
    ctx = NuContext.build(nu)
    total_e = nu.count("E")
    total_n = len(nu) - total_e
    out: list[str] = []
    word: list[str] = []

    def rec(x: int, y: int) -> None:
        if len(word) == len(nu):
            out.append("".join(word))
            return
        if x < total_e and x + 1 <= ctx.rightmost[y]:
            word.append("E")
            rec(x + 1, y)
            word.pop()
        if y < total_n:
            word.append("N")
            rec(x, y + 1)
            word.pop()

    rec(0, 0)
    return tuple(out)


# ---------------------------------------------------------------------------
# the bijection ρ: trees -> paths above ν(I, J̄)


def rho(p: IndexPair, t: Tree) -> str:
    """Read off barred degrees: per j̄ in order, (deg − 1) E steps then an N;
    the final N is dropped."""
    deg = {j: 0 for j in p.J}
    for _, j in t:
        deg[j] += 1
    word = "".join("E" * (deg[j] - 1) + "N" for j in p.J)
    return word[:-1]


def rho_point_table(p: IndexPair, t: Tree) -> dict[Arc, int]:
    """Arc -> point index of ρ(t): arcs at j̄ (the (k+1)-st barred element)
    in decreasing plain order match points at height k left to right."""
    mu = rho(p, t)
    pts = path_points(mu)
    at_height: dict[int, list[int]] = {}
    for s, (_, y) in enumerate(pts):
        at_height.setdefault(y, []).append(s)
    table: dict[Arc, int] = {}
    for k, j in enumerate(p.J):
        arcs = sorted((a for a in t if a[1] == j), reverse=True)
        points = at_height[k]
        if len(arcs) != len(points):
            raise RuntimeError("degree/point mismatch while tabulating rho")
        for a, s in zip(arcs, points):
            table[a] = s
    return table


def rho_inv(p: IndexPair, mu: str) -> Tree:
    """Inverse of ρ: per barred element, hook the required number of arcs
    as far right as possible without creating crossings."""
    p.require_standing()
    if p.mode != "A":
        raise ValueError("rho is a mode A bijection")
    if not is_above(mu, nu_of_pair(p)):
        raise ValueError(f"{mu!r} is not weakly above nu of {p.label()}")
    pts = path_points(mu)
    count_at = {}
    for _, y in pts:
        count_at[y] = count_at.get(y, 0) + 1
    arcs: list[Arc] = []
    for k, j in enumerate(p.J):
        need = count_at.get(k, 0)
        got = 0
        for i in reversed(p.I):
            if i > j:
                continue
            a = (i, j)
            if any(crosses_linear(a, b) for b in arcs):
                continue
            arcs.append(a)
            got += 1
            if got == need:
                break
        if got != need:
            raise RuntimeError(f"could not place {need} arcs at {j}̄")
    return tuple(sorted(arcs))
