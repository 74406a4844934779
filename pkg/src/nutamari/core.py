"""Index pairs (I, J-bar) over the linearly ordered ground set N ⊔ N̄.

Convention used everywhere: 0 ≺ 0̄ ≺ 1 ≺ 1̄ ≺ 2 ≺ ...  An element is
modeled as (value, side) with side 0 for plain numbers (the set I) and
side 1 for barred ones (the set J̄), so ≺ is ordinary tuple comparison.
Arcs join a plain element i to a barred element j̄ and are stored as
plain int pairs (i, j).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

I_SIDE = 0
J_SIDE = 1

Node = tuple[int, int]  # (value, side)
Arc = tuple[int, int]  # (i, j) meaning i -- j̄


@dataclass(frozen=True, order=True)
class IndexPair:
    """A pair of finite index sets I ⊆ N, J̄ ⊆ N̄.

    mode "A" is the linear setting (arcs must be increasing, i ≤ j);
    mode "B" is the cyclic setting on Z/(n+1), where n is the ambient
    maximum (defaults to max(I ∪ J)).
    """

    I: tuple[int, ...]
    J: tuple[int, ...]
    mode: str = "A"
    n: int = field(default=-1)

    def __post_init__(self) -> None:
        object.__setattr__(self, "I", tuple(sorted(set(self.I))))
        object.__setattr__(self, "J", tuple(sorted(set(self.J))))
        if not self.I or not self.J:
            raise ValueError("both I and J must be nonempty")
        if self.I[0] < 0 or self.J[0] < 0:
            raise ValueError("index values must be nonnegative")
        if self.mode not in ("A", "B"):
            raise ValueError(f"mode must be 'A' or 'B', got {self.mode!r}")
        hi = max(self.I[-1], self.J[-1])
        if self.mode == "A":
            object.__setattr__(self, "n", hi)
        else:
            n = self.n if self.n >= 0 else hi
            if n < hi:
                raise ValueError(f"n={n} smaller than max index {hi}")
            object.__setattr__(self, "n", n)

    @property
    def size(self) -> int:
        return len(self.I) + len(self.J)

    def nodes(self) -> tuple[Node, ...]:
        """All elements of I ⊔ J̄ in ≺ order."""
        return tuple(sorted([(i, I_SIDE) for i in self.I] + [(j, J_SIDE) for j in self.J]))

    def is_standing(self) -> bool:
        """Mode-A standing assumption: min of I ⊔ J̄ in I, max in J̄."""
        return self.I[0] <= self.J[0] and self.J[-1] >= self.I[-1]

    def require_standing(self) -> None:
        if self.mode == "A" and not self.is_standing():
            raise ValueError(
                f"pair I={self.I} J={self.J} violates the standing assumption "
                "(min must be plain, max barred); use normalize() first"
            )

    def label(self) -> str:
        out = "I=%s;J=%s" % (",".join(map(str, self.I)), ",".join(map(str, self.J)))
        if self.mode == "B":
            out += ";n=%d" % self.n
        return out


def normalize(p: IndexPair) -> IndexPair:
    """Drop elements that can carry no increasing arc (mode A).

    I-elements above max J̄ and J̄-elements below min I are removed; the
    result satisfies the standing assumption.
    """
    if p.mode != "A":
        raise ValueError("normalize applies to mode A pairs")
    I2 = tuple(i for i in p.I if i <= p.J[-1])
    J2 = tuple(j for j in p.J if j >= p.I[0])
    if not I2 or not J2:
        raise ValueError(f"pair I={p.I} J={p.J} admits no increasing arc")
    return IndexPair(I2, J2, "A")


def reverse_pair(p: IndexPair) -> IndexPair:
    """The reversed pair (n−J, n−I with bars), n the ambient maximum."""
    n = p.n
    return IndexPair(
        tuple(sorted(n - j for j in p.J)),
        tuple(sorted(n - i for i in p.I)),
        p.mode,
        p.n if p.mode == "B" else -1,
    )


# ---------------------------------------------------------------------------
# lattice path words


def is_path_word(word: str) -> bool:
    return all(c in "NE" for c in word)


def path_points(word: str) -> list[tuple[int, int]]:
    """The len(word)+1 lattice points visited, starting at (0, 0)."""
    pts = [(0, 0)]
    x = y = 0
    for c in word:
        if c == "E":
            x += 1
        else:
            y += 1
        pts.append((x, y))
    return pts


def transpose_word(word: str) -> str:
    """Reverse the word and swap N ↔ E (180° rotation of the path)."""
    return "".join("N" if c == "E" else "E" for c in reversed(word))


def is_above(mu: str, nu: str) -> bool:
    """True iff mu and nu share endpoints and mu stays weakly above nu."""
    if len(mu) != len(nu) or mu.count("N") != nu.count("N"):
        return False
    a = b = 0
    for cm, cn in zip(mu, nu):
        a += cm == "N"
        b += cn == "N"
        if a < b:
            return False
    return True


def nu_of_pair(p: IndexPair) -> str:
    """The path ν(I, J̄): kth step E iff the (k+1)st element of I ⊔ J̄ is plain."""
    p.require_standing()
    nodes = p.nodes()
    return "".join("E" if side == I_SIDE else "N" for _, side in nodes[1:-1])


def pair_of_nu(word: str) -> IndexPair:
    """The canonical pair with ν(I, J̄) = word: a partition of {0, ..., len+1}."""
    if not is_path_word(word):
        raise ValueError(f"not a path word: {word!r}")
    I = [0] + [k for k, c in enumerate(word, start=1) if c == "E"]
    J = [k for k, c in enumerate(word, start=1) if c == "N"] + [len(word) + 1]
    return IndexPair(tuple(I), tuple(J), "A")


# ---------------------------------------------------------------------------
# parsing of command-line style inputs

_PAIR_RE = re.compile(r"^\s*I\s*=\s*([\d\s,]+);\s*J\s*=\s*([\d\s,]+?)\s*(?:;\s*n\s*=\s*(\d+))?\s*$")


def parse_pair(text: str, mode: str = "A", n: int = -1) -> IndexPair:
    """Parse "I=0,1,3;J=2,5,8" (optionally "...;n=9")."""
    m = _PAIR_RE.match(text)
    if not m:
        raise ValueError(f"cannot parse pair spec {text!r} (expected 'I=..,..;J=..,..')")
    I = tuple(int(t) for t in m.group(1).replace(" ", "").split(",") if t)
    J = tuple(int(t) for t in m.group(2).replace(" ", "").split(",") if t)
    if m.group(3) is not None:
        n = int(m.group(3))
    return IndexPair(I, J, mode, n)


def parse_nu(text: str) -> str:
    """Expand a path expression like "ENE", "(NE)^3" or "(NE^2)^3E"."""
    pos = 0
    text = text.strip()

    def parse_seq(depth: int) -> str:
        nonlocal pos
        out: list[str] = []
        while pos < len(text):
            c = text[pos]
            if c in "NE":
                pos += 1
                out.append(c * parse_power())
            elif c == "(":
                pos += 1
                inner = parse_seq(depth + 1)
                if pos >= len(text) or text[pos] != ")":
                    raise ValueError(f"unbalanced '(' in {text!r}")
                pos += 1
                out.append(inner * parse_power())
            elif c == ")" and depth > 0:
                break
            elif c.isspace():
                pos += 1
            else:
                raise ValueError(f"unexpected {c!r} in path expression {text!r}")
        return "".join(out)

    def parse_power() -> int:
        nonlocal pos
        if pos < len(text) and text[pos] == "^":
            pos += 1
            m = re.match(r"\d+", text[pos:])
            if not m:
                raise ValueError(f"'^' without exponent in {text!r}")
            pos += m.end()
            return int(m.group())
        return 1

    word = parse_seq(0)
    if pos != len(text):
        raise ValueError(f"trailing {text[pos:]!r} in path expression {text!r}")
    return word
