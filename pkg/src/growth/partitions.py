"""Partitions in a d x (n-d) box: complementation, the index-set bijection,
covers, and brute-force Littlewood-Richardson coefficients.

A partition is a tuple of weakly decreasing positive integers; trailing
zeros are stripped, so () is the empty partition.  The box is a
:class:`Frame` passed explicitly to every operation that needs it.
"""

from dataclasses import dataclass
from functools import cache
from itertools import combinations
from math import factorial


@dataclass(frozen=True)
class Frame:
    """The d x (n-d) box: d rows available, n-d columns available."""

    d: int
    n: int

    def __post_init__(self):
        if not (0 <= self.d <= self.n):
            raise ValueError(f"need 0 <= d <= n, got d={self.d}, n={self.n}")

    @property
    def cols(self) -> int:
        return self.n - self.d

    @property
    def size(self) -> int:
        """Number of boxes in the full rectangle."""
        return self.d * (self.n - self.d)

    def rectangle(self) -> tuple[int, ...]:
        return (self.cols,) * self.d if self.cols else ()


def normalize(parts) -> tuple[int, ...]:
    """Canonical form: tuple with trailing zeros removed."""
    parts = tuple(parts)
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise ValueError(f"not weakly decreasing: {parts}")
    if any(p < 0 for p in parts):
        raise ValueError(f"negative part: {parts}")
    return parts


def fits(lam: tuple[int, ...], frame: Frame) -> bool:
    """True if lam fits inside the frame's box."""
    return len(lam) <= frame.d and (not lam or lam[0] <= frame.cols)


def size(lam: tuple[int, ...]) -> int:
    return sum(lam)


def contains(outer: tuple[int, ...], inner: tuple[int, ...]) -> bool:
    """True if inner is contained in outer as Young diagrams."""
    return all((inner[i] if i < len(inner) else 0) <= (outer[i] if i < len(outer) else 0)
               for i in range(max(len(inner), len(outer))))


def complement(lam: tuple[int, ...], frame: Frame) -> tuple[int, ...]:
    """The complementary partition in the frame: rotate the box 180 degrees."""
    if not fits(lam, frame):
        raise ValueError(f"{lam} does not fit in {frame}")
    full = list(lam) + [0] * (frame.d - len(lam))
    return normalize(frame.cols - full[i] for i in reversed(range(frame.d)))


def index_set(lam: tuple[int, ...], frame: Frame) -> frozenset[int]:
    """The d-subset of [n] attached to lam: k-th smallest element is
    lam_{d+1-k} + k (missing parts count as zero)."""
    if not fits(lam, frame):
        raise ValueError(f"{lam} does not fit in {frame}")
    full = list(lam) + [0] * (frame.d - len(lam))
    return frozenset(full[frame.d - k] + k for k in range(1, frame.d + 1))


def from_index_set(subset, frame: Frame) -> tuple[int, ...]:
    """Inverse of :func:`index_set`."""
    elems = sorted(subset)
    if len(elems) != frame.d or any(not (1 <= e <= frame.n) for e in elems):
        raise ValueError(f"{subset} is not a {frame.d}-subset of [1,{frame.n}]")
    if len(set(elems)) != frame.d:
        raise ValueError(f"repeated elements in {subset}")
    parts = [elems[k - 1] - k for k in range(frame.d, 0, -1)]
    return normalize(parts)


def covers(lam: tuple[int, ...], frame: Frame) -> list[tuple[int, ...]]:
    """All partitions in the frame obtained from lam by adding one box,
    ordered by ascending row of the added box."""
    if not fits(lam, frame):
        raise ValueError(f"{lam} does not fit in {frame}")
    out = []
    for row in range(frame.d):
        cur = lam[row] if row < len(lam) else 0
        above = (lam[row - 1] if row - 1 < len(lam) else 0) if row >= 1 else frame.cols
        if cur < frame.cols and cur < above:
            out.append(add_box(lam, row))
    return out


def down_covers(lam: tuple[int, ...]) -> list[tuple[int, ...]]:
    """All partitions obtained from lam by removing one corner box,
    ordered by ascending row of the removed box."""
    out = []
    for row in range(len(lam)):
        below = lam[row + 1] if row + 1 < len(lam) else 0
        if lam[row] > below:
            parts = list(lam)
            parts[row] -= 1
            out.append(normalize(parts))
    return out


def add_box(lam: tuple[int, ...], row: int) -> tuple[int, ...]:
    """Add one box in the given 0-based row; result must be a partition."""
    parts = list(lam) + [0] * (row + 1 - len(lam))
    parts[row] += 1
    return normalize(parts)


def added_box(small: tuple[int, ...], big: tuple[int, ...]) -> tuple[int, int] | None:
    """If big = small plus one box, return that box as 0-based (row, col);
    otherwise None."""
    if sum(big) != sum(small) + 1 or not contains(big, small):
        return None
    for row in range(len(big)):
        s = small[row] if row < len(small) else 0
        if big[row] == s + 1:
            return (row, s)
    return None


def union(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    """Rowwise maximum of two partitions."""
    m = max(len(p), len(q))
    return normalize(tuple(max(p[i] if i < len(p) else 0,
                               q[i] if i < len(q) else 0) for i in range(m)))


def intersect(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    """Rowwise minimum of two partitions."""
    m = min(len(p), len(q))
    return normalize(tuple(min(p[i], q[i]) for i in range(m)))


def intermediates(bottom: tuple[int, ...], top: tuple[int, ...]) -> list[tuple[int, ...]]:
    """All partitions mu with bottom < mu < top when top/bottom has two
    boxes: two if the boxes are nonadjacent, one if they form a domino."""
    if sum(top) != sum(bottom) + 2 or not contains(top, bottom):
        raise ValueError(f"{top}/{bottom} is not a two-box skew shape")
    rows = []
    for row in range(len(top)):
        b = bottom[row] if row < len(bottom) else 0
        rows.extend([row] * (top[row] - b))
    out = []
    for row in rows[:1] if rows[0] == rows[1] else rows:
        above = (bottom[row - 1] if row - 1 < len(bottom) else 0) if row else None
        if row and (bottom[row] if row < len(bottom) else 0) >= above:
            continue  # adding here first would not be a partition
        cand = add_box(bottom, row)
        if contains(top, cand) and cand not in out:
            out.append(cand)
    return out


def is_domino(bottom: tuple[int, ...], top: tuple[int, ...]) -> bool:
    """True if the two boxes of top/bottom are adjacent (share an edge)."""
    return len(intermediates(bottom, top)) == 1


@cache
def _chain_count(inner: tuple[int, ...], outer: tuple[int, ...]) -> int:
    """Number of saturated chains from inner to outer in Young's lattice."""
    if inner == outer:
        return 1
    return sum(_chain_count(inner, mu) for mu in down_covers(outer)
               if contains(mu, inner))


def syt_count(outer: tuple[int, ...], inner: tuple[int, ...] = ()) -> int:
    """Number of standard tableaux of skew shape outer/inner, counted as
    saturated chains in Young's lattice."""
    if not contains(outer, inner):
        raise ValueError(f"{inner} is not contained in {outer}")
    return _chain_count(normalize(inner), normalize(outer))


def rectangle_syt_formula(frame: Frame) -> int:
    """Closed-form count of standard tableaux of the full d x (n-d)
    rectangle: r! / (d (d+1) ... (n-1) falling products per column)."""
    r = frame.size
    # hook length of box (i, j): (d - i) + (cols - j) - 1
    denom = 1
    for i in range(frame.d):
        for j in range(frame.cols):
            denom *= (frame.d - i) + (frame.cols - j) - 1
    return factorial(r) // denom


@cache
def _lr2(outer: tuple[int, ...], inner: tuple[int, ...], content: tuple[int, ...]) -> int:
    """Two-factor Littlewood-Richardson coefficient: count semistandard
    fillings of outer/inner with content whose reverse reading word is a
    lattice word."""
    if sum(outer) != sum(inner) + sum(content) or not contains(outer, inner):
        return 0
    rows = len(outer)
    inner_full = list(inner) + [0] * (rows - len(inner))
    maxval = len(content)
    # cells in reverse reading order: rows top to bottom, right to left
    cells = [(i, j) for i in range(rows)
             for j in range(outer[i] - 1, inner_full[i] - 1, -1)]
    grid = {}
    cnt = [0] * (maxval + 2)
    total = 0

    def place(idx: int):
        nonlocal total
        if idx == len(cells):
            total += 1
            return
        i, j = cells[idx]
        lo = 1
        if i > 0 and j < (outer[i - 1] if i - 1 < rows else 0) and j >= inner_full[i - 1]:
            lo = grid[(i - 1, j)] + 1  # strict down columns
        hi = maxval
        if (i, j + 1) in grid:
            hi = grid[(i, j + 1)]  # weak along rows
        for v in range(lo, hi + 1):
            if cnt[v] >= content[v - 1]:
                continue
            if v > 1 and cnt[v - 1] < cnt[v] + 1:
                continue  # lattice word condition
            grid[(i, j)] = v
            cnt[v] += 1
            place(idx + 1)
            cnt[v] -= 1
            del grid[(i, j)]

    place(0)
    return total


@cache
def _lr_multi(inner: tuple[int, ...], factors: tuple[tuple[int, ...], ...],
              outer: tuple[int, ...]) -> int:
    """Chains inner -> outer with steps weighted by two-factor coefficients."""
    if not factors:
        return 1 if inner == outer else 0
    head, rest = factors[0], factors[1:]
    if not rest:
        return _lr2(outer, inner, head)
    total = 0
    for nu in _shapes_between(inner, outer, sum(inner) + sum(head)):
        c = _lr2(nu, inner, head)
        if c:
            total += c * _lr_multi(nu, rest, outer)
    return total


@cache
def _shapes_between(inner: tuple[int, ...], outer: tuple[int, ...],
                    target_size: int) -> tuple[tuple[int, ...], ...]:
    """All partitions nu with inner <= nu <= outer and |nu| = target_size."""
    out = []

    def build2(row: int, prev: int, acc: list[int]):
        if row == len(outer):
            if sum(acc) == target_size:
                out.append(normalize(acc))
            return
        lo = inner[row] if row < len(inner) else 0
        hi = min(outer[row], prev)
        for v in range(lo, hi + 1):
            build2(row + 1, v, acc + [v])

    build2(0, outer[0] if outer else 0, [])
    return tuple(out)


def shapes_between(inner, outer, target_size: int):
    """All partitions nu with inner <= nu <= outer and |nu| = target_size."""
    return _shapes_between(normalize(inner), normalize(outer), target_size)


def lr_coefficient(target: tuple[int, ...], factors, frame: Frame | None = None) -> int:
    """Multi-factor Littlewood-Richardson coefficient: the multiplicity of
    the product of the factors on the target shape.  Returns 0 on size
    mismatch.  Satisfies the complement identity
    lr(rectangle, [l1..lr]) = lr(lr_last^C, [l1..l_{r-1}])."""
    target = normalize(target)
    factors = tuple(normalize(f) for f in factors)
    if sum(map(sum, factors)) != sum(target):
        return 0
    if frame is not None and not fits(target, frame):
        raise ValueError(f"{target} does not fit in {frame}")
    return _lr_multi((), factors, target)
