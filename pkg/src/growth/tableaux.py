"""Standard skew tableaux as partition chains, the growth-diagram local
rule, shuffling, rectification, and dual-equivalence canonical forms.

A tableau is a tuple of partitions, each adding one box to the previous;
entry k of the tableau is the box added at step k.  All jeu de taquin is
done through the local rule on unit squares of a growth rectangle.
"""

from dataclasses import dataclass
from functools import cache

from growth.partitions import (
    added_box, contains, intermediates, intersect, normalize, union,
)

Chain = tuple[tuple[int, ...], ...]


def validate_chain(chain) -> Chain:
    """Check single-box growth and return the normalized chain."""
    chain = tuple(normalize(p) for p in chain)
    if not chain:
        raise ValueError("empty chain")
    for a, b in zip(chain, chain[1:]):
        if added_box(a, b) is None:
            raise ValueError(f"step {a} -> {b} does not add one box")
    return chain


def inner_shape(t: Chain) -> tuple[int, ...]:
    return t[0]


def outer_shape(t: Chain) -> tuple[int, ...]:
    return t[-1]


def superstandard(lam: tuple[int, ...]) -> Chain:
    """The row-reading straight tableau of shape lam: 1..lam_1 in row one,
    then continuing row by row; returned as a chain from the empty shape."""
    lam = normalize(lam)
    chain = [()]
    for row in range(len(lam)):
        for _ in range(lam[row]):
            prev = list(chain[-1]) + [0] * (row + 1 - len(chain[-1]))
            prev[row] += 1
            chain.append(normalize(prev))
    return tuple(chain)


def other_middle(bottom, top, middle):
    """Given a unit square's bottom, top and one middle, the unique other
    middle: the second intermediate when the skew is two nonadjacent boxes,
    the same one when it is a domino."""
    mids = intermediates(bottom, top)
    if middle not in mids:
        raise ValueError(f"{middle} is not between {bottom} and {top}")
    if len(mids) == 1:
        return mids[0]
    return mids[0] if middle == mids[1] else mids[1]


def top_of_square(bottom, m1, m2):
    """Top corner forced by two distinct middles (their union).  Raises if
    the middles coincide, where the top is genuinely ambiguous."""
    if m1 == m2:
        raise ValueError("equal middles do not determine the top corner")
    return union(m1, m2)


def bottom_of_square(top, m1, m2):
    """Bottom corner forced by two distinct middles (their intersection)."""
    if m1 == m2:
        raise ValueError("equal middles do not determine the bottom corner")
    return intersect(m1, m2)


def shuffle(lower: Chain, upper: Chain) -> tuple[Chain, Chain]:
    """Shuffle two consecutive tableaux by filling the growth rectangle
    with lower along the bottom edge and upper up the right edge; returns
    (new_lower, new_upper) read off the left and top edges.  An involution;
    new_lower is slide equivalent to upper and dual equivalent to lower
    pushed through, and symmetrically."""
    lower = validate_chain(lower)
    upper = validate_chain(upper)
    if lower[-1] != upper[0]:
        raise ValueError(
            f"chains not consecutive: {lower[-1]} != {upper[0]}")
    w = len(lower) - 1
    h = len(upper) - 1
    grid = [[None] * (w + 1) for _ in range(h + 1)]
    grid[0] = list(lower)
    for i in range(h + 1):
        grid[i][w] = upper[i]
    for i in range(h):
        for j in range(w - 1, -1, -1):
            grid[i + 1][j] = other_middle(
                grid[i][j], grid[i + 1][j + 1], grid[i][j + 1])
    new_lower = tuple(grid[i][0] for i in range(h + 1))
    new_upper = tuple(grid[h][j] for j in range(w + 1))
    return new_lower, new_upper


def rectify(t: Chain) -> Chain:
    """The unique straight-shape tableau slide equivalent to t, obtained by
    shuffling a straight tableau of the inner shape past t."""
    t = validate_chain(t)
    if not t[0]:
        return t
    new_lower, _ = shuffle(superstandard(t[0]), t)
    return new_lower


def rshape(t: Chain) -> tuple[int, ...]:
    """Rectification shape of t."""
    return outer_shape(rectify(t))


@cache
def canonical_rep(t: Chain) -> Chain:
    """The unique tableau dual equivalent to t and slide equivalent to the
    superstandard tableau of t's rectification shape.  Computed by two
    shuffles: push the superstandard tableau of the inner shape through t,
    then push the superstandard tableau of the rectification shape back."""
    t = validate_chain(t)
    rect, beta = shuffle(superstandard(t[0]), t)
    mu = rect[-1]
    _, phi = shuffle(superstandard(mu), beta)
    return phi


def dual_equivalent(t1: Chain, t2: Chain) -> bool:
    """True iff the tableaux have the same shape and equal canonical
    representatives."""
    t1, t2 = validate_chain(t1), validate_chain(t2)
    if t1[0] != t2[0] or t1[-1] != t2[-1] or len(t1) != len(t2):
        return False
    return canonical_rep(t1) == canonical_rep(t2)


def enumerate_chains(outer, inner) -> list[Chain]:
    """All standard tableaux of shape outer/inner, as chains, in
    lexicographic order of the chain."""
    outer, inner = normalize(outer), normalize(inner)
    if not contains(outer, inner):
        return []
    out = []

    def build(acc):
        cur = acc[-1]
        if cur == outer:
            out.append(tuple(acc))
            return
        for row in range(len(outer)):
            c = cur[row] if row < len(cur) else 0
            above = (cur[row - 1] if row - 1 < len(cur) else 0) if row else None
            if c >= outer[row]:
                continue
            if row and c >= above:
                continue
            nxt = list(cur) + [0] * (row + 1 - len(cur))
            nxt[row] += 1
            nxt = normalize(nxt)
            if contains(outer, nxt):
                build(acc + [nxt])

    build([inner])
    return sorted(out)


@dataclass(frozen=True)
class DualClass:
    """A dual-equivalence class of skew standard tableaux, stored by its
    canonical representative and rectification shape."""

    representative: Chain
    rshape: tuple[int, ...]

    @staticmethod
    def of(t: Chain) -> "DualClass":
        rep = canonical_rep(t)
        return DualClass(rep, rshape(rep))

    @property
    def inner(self) -> tuple[int, ...]:
        return self.representative[0]

    @property
    def outer(self) -> tuple[int, ...]:
        return self.representative[-1]


def dual_classes(outer, inner, target_rshape=None) -> list[DualClass]:
    """All dual-equivalence classes of tableaux of shape outer/inner,
    optionally filtered by rectification shape.  Empty on size mismatch."""
    outer, inner = normalize(outer), normalize(inner)
    if target_rshape is not None:
        target_rshape = normalize(target_rshape)
        if sum(outer) - sum(inner) != sum(target_rshape):
            return []
    seen = []
    for t in enumerate_chains(outer, inner):
        cls = DualClass.of(t)
        if cls not in seen and (target_rshape is None or cls.rshape == target_rshape):
            seen.append(cls)
    return seen


def shuffle_classes(a: DualClass, b: DualClass) -> tuple[DualClass, DualClass]:
    """Shuffle two dual-equivalence classes of consecutive shapes; the
    result is independent of the representatives used."""
    if a.outer != b.inner:
        raise ValueError(f"classes not consecutive: {a.outer} != {b.inner}")
    new_lower, new_upper = shuffle(a.representative, b.representative)
    return DualClass.of(new_lower), DualClass.of(new_upper)
