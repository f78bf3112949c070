"""Cylindrical growth diagrams: construction from a path, validation,
enumeration, promotion, caterpillar labels, and the d=2 noncrossing
matching bijection.

The index set is {(i, j) : i <= j <= i + r} with the glide symmetry
(i, j) -> (i + r, j + r); an entry therefore depends only on
(i mod r, j - i), which is how the fundamental domain is stored."""

from dataclasses import dataclass
from itertools import combinations

from growth.partitions import (
    Frame, added_box, complement, contains, intermediates, intersect,
    is_domino, normalize, union,
)
from growth.tableaux import (
    Chain, enumerate_chains, other_middle, validate_chain,
)


@dataclass(frozen=True)
class CylGrowthDiagram:
    """A cylindrical growth diagram on the fundamental domain rows
    i in [0, r); rows[i][k] holds the entry at (i, i + k) for k in [0, r]."""

    frame: Frame
    r: int
    rows: tuple[tuple[tuple[int, ...], ...], ...]

    def get(self, i: int, j: int) -> tuple[int, ...]:
        """Entry at (i, j) for any integers with 0 <= j - i <= r."""
        k = j - i
        if not (0 <= k <= self.r):
            raise IndexError(f"({i},{j}) outside the diagram band")
        return self.rows[i % self.r][k]

    def row(self, i: int) -> Chain:
        """The chain along row i, from (i, i) to (i, i + r)."""
        return self.rows[i % self.r]

    def to_json(self) -> dict:
        return {
            "frame": {"d": self.frame.d, "n": self.frame.n},
            "r": self.r,
            "rows": [[list(p) for p in row] for row in self.rows],
        }

    @staticmethod
    def from_json(data: dict) -> "CylGrowthDiagram":
        frame = Frame(data["frame"]["d"], data["frame"]["n"])
        rows = tuple(tuple(normalize(p) for p in row) for row in data["rows"])
        return CylGrowthDiagram(frame, data["r"], rows)


def row_path(r: int, i: int = 0) -> list[tuple[int, int]]:
    """The path along row i: (i, i), (i, i+1), ..., (i, i+r)."""
    return [(i, i + k) for k in range(r + 1)]


def validate_path(path, r: int) -> list[tuple[int, int]]:
    """A path is a sequence of r+1 lattice points starting on the diagonal,
    each step moving up (i-1, j) or right (i, j+1), ending at width r."""
    path = [tuple(p) for p in path]
    if len(path) != r + 1:
        raise ValueError(f"path must have {r + 1} points, got {len(path)}")
    if path[0][0] != path[0][1]:
        raise ValueError("path must start on the diagonal")
    for (i1, j1), (i2, j2) in zip(path, path[1:]):
        if (i2, j2) not in ((i1 - 1, j1), (i1, j1 + 1)):
            raise ValueError(f"bad step ({i1},{j1}) -> ({i2},{j2})")
    if path[-1][1] - path[-1][0] != r:
        raise ValueError("path must end at the opposite boundary")
    return path


class _Completion:
    """Fixpoint solver filling the fundamental domain from seeds.

    Keys are (i mod r, j - i).  Unit squares have corners
    bottom (a, k), right middle (a, k+1), left middle (a-1, k+1),
    top (a-1, k+2); only forced deductions are applied: a missing middle
    is always unique, a missing top/bottom only when the middles differ."""

    def __init__(self, frame: Frame, r: int):
        self.frame = frame
        self.r = r
        self.known: dict[tuple[int, int], tuple[int, ...]] = {}
        box_c = complement((1,), frame)
        rect = frame.rectangle()
        for a in range(r):
            self.set(a, 0, ())
            self.set(a, 1, (1,))
            self.set(a, r - 1, box_c)
            self.set(a, r, rect)

    def set(self, a: int, k: int, value):
        value = normalize(value)
        old = self.known.get((a % self.r, k))
        if old is not None and old != value:
            raise ValueError(
                f"inconsistent entry at row {a % self.r}, offset {k}: "
                f"{old} vs {value}")
        self.known[(a % self.r, k)] = value

    def seed_point(self, i: int, j: int, value):
        self.set(i % self.r, j - i, value)

    def solve(self) -> CylGrowthDiagram:
        r = self.r
        total = r * (r + 1)
        progress = True
        while progress and len(self.known) < total:
            progress = False
            for a in range(r):
                for k in range(r - 1):
                    if self._square(a, k):
                        progress = True
            if self._glide():
                progress = True
        if len(self.known) < total:
            raise ValueError("growth recursion stalled; inconsistent seeds")
        rows = tuple(tuple(self.known[(a, k)] for k in range(r + 1))
                     for a in range(r))
        diagram = CylGrowthDiagram(self.frame, r, rows)
        ok, problems = cgd_validate(diagram)
        if not ok:
            raise ValueError(f"completed diagram invalid: {problems[0]}")
        return diagram

    def _glide(self) -> bool:
        # every diagram satisfies gamma(i, j) = gamma(j, i + r)^C, so a
        # known entry also determines its glide-reflect image
        r = self.r
        progress = False
        for (a, k), value in list(self.known.items()):
            image = ((a + k) % r, r - k)
            if image not in self.known:
                self.known[image] = complement(value, self.frame)
                progress = True
        return progress

    def _square(self, a: int, k: int) -> bool:
        r = self.r
        keys = [(a, k), (a, k + 1), ((a - 1) % r, k + 1), ((a - 1) % r, k + 2)]
        vals = [self.known.get(key) for key in keys]
        missing = [idx for idx, v in enumerate(vals) if v is None]
        if len(missing) != 1:
            return False
        bottom, mid_r, mid_l, top = vals
        idx = missing[0]
        if idx == 0 and mid_r != mid_l:
            self.known[keys[0]] = intersect(mid_r, mid_l)
        elif idx == 1:
            self.known[keys[1]] = other_middle(bottom, top, mid_l)
        elif idx == 2:
            self.known[keys[2]] = other_middle(bottom, top, mid_r)
        elif idx == 3 and mid_r != mid_l:
            self.known[keys[3]] = union(mid_r, mid_l)
        else:
            return False
        return True


def cgd_from_path(path, chain, frame: Frame) -> CylGrowthDiagram:
    """The unique cylindrical growth diagram taking the given chain along
    the given path.  The chain must run from the empty shape to the full
    rectangle."""
    r = frame.size
    path = validate_path(path, r)
    chain = validate_chain(chain)
    if len(chain) != r + 1:
        raise ValueError(f"chain must have {r + 1} shapes, got {len(chain)}")
    if chain[0] != () or chain[-1] != frame.rectangle():
        raise ValueError("chain must run from the empty shape to the rectangle")
    solver = _Completion(frame, r)
    for (i, j), value in zip(path, chain):
        solver.seed_point(i, j, value)
    return solver.solve()


def cgd_validate(g: CylGrowthDiagram) -> tuple[bool, list[str]]:
    """Check boundary anchors, single-box growth, the local condition on
    every unit square, and the glide-reflect symmetry."""
    problems = []
    r = g.r
    frame = g.frame
    box_c = complement((1,), frame)
    for a in range(r):
        row = g.rows[a]
        if row[0] != ():
            problems.append(f"row {a}: diagonal entry not empty")
        if row[1] != (1,):
            problems.append(f"row {a}: offset 1 is not a single box")
        if row[r - 1] != box_c:
            problems.append(f"row {a}: offset {r - 1} is not the box complement")
        if row[r] != frame.rectangle():
            problems.append(f"row {a}: offset {r} is not the rectangle")
        for k in range(r):
            if added_box(row[k], row[k + 1]) is None:
                problems.append(f"row {a}, offset {k}: step does not add a box")
        for k in range(r):
            below = g.rows[(a + 1) % r][k]
            if added_box(below, row[k + 1]) is None:
                problems.append(
                    f"column step into row {a}, offset {k + 1}: not one box")
    for a in range(r):
        for k in range(r - 1):
            bottom = g.rows[a][k]
            mid_r = g.rows[a][k + 1]
            mid_l = g.rows[(a - 1) % r][k + 1]
            top = g.rows[(a - 1) % r][k + 2]
            try:
                if not is_domino(bottom, top) and mid_l == mid_r:
                    problems.append(
                        f"square at row {a}, offset {k}: equal middles under "
                        f"a nonadjacent skew")
            except ValueError:
                problems.append(f"square at row {a}, offset {k}: malformed")
    for a in range(r):
        for k in range(r + 1):
            # entry at (a, a+k) must equal the complement of the entry at
            # (a+k, a+r), read through the periodic accessor
            expect = complement(g.get(a + k, a + r), frame)
            if g.rows[a][k] != expect:
                problems.append(
                    f"glide-reflect fails at row {a}, offset {k}")
    return (not problems, problems)


def read_path(g: CylGrowthDiagram, path) -> Chain:
    """The chain of entries along a path."""
    path = validate_path(path, g.r)
    return tuple(g.get(i, j) for i, j in path)


def cgd_enumerate(frame: Frame) -> list[CylGrowthDiagram]:
    """One diagram per standard tableau of the full rectangle, built along
    row 0, in lexicographic order of the row-0 chain."""
    r = frame.size
    return [cgd_from_path(row_path(r), chain, frame)
            for chain in enumerate_chains(frame.rectangle(), ())]


def promotion(chain: Chain, frame: Frame) -> Chain:
    """Promotion of a rectangular standard tableau: place the chain along
    row 0 of its growth diagram and read row 1."""
    chain = validate_chain(chain)
    if chain[0] != () or chain[-1] != frame.rectangle():
        raise ValueError("promotion needs a straight tableau of the rectangle")
    g = cgd_from_path(row_path(frame.size), chain, frame)
    return g.row(1)


def caterpillar_labels(g: CylGrowthDiagram, path):
    """The caterpillar data of a path: the permutation pi of [r] listing
    which marked point each step attaches, and the r-3 internal node
    labels, which are the path entries at steps 2 .. r-2."""
    r = g.r
    path = validate_path(path, r)
    pi = []
    for (i1, j1), (i2, j2) in zip(path, path[1:]):
        pos = i2 if i2 == i1 - 1 else j1
        pi.append((pos - 1) % r + 1)
    labels = [g.get(i, j) for i, j in path[2:r - 1]]
    return pi, labels


def matching_of_cgd(g: CylGrowthDiagram):
    """The noncrossing matching of a d=2 diagram: {a, b} is an arc exactly
    when the interior window entry is a balanced column pair (s, s) and the
    closed window entry is (s+1, s+1)."""
    if g.frame.d != 2:
        raise ValueError("matchings exist only for d = 2")
    r = g.r
    arcs = []
    for a, b in combinations(range(1, r + 1), 2):
        if (b - a) % 2 == 0:
            continue
        s = (b - a - 1) // 2
        interior = g.get(a, b - 1)
        closed = g.get(a - 1, b)
        if interior == normalize((s, s)) and closed == (s + 1, s + 1):
            arcs.append(frozenset((a, b)))
    matched = sorted(x for arc in arcs for x in arc)
    if matched != list(range(1, r + 1)):
        raise ValueError("diagram did not yield a perfect matching")
    validate_matching(arcs, r)
    return frozenset(arcs)


def validate_matching(arcs, r: int):
    """Check that arcs form a perfect noncrossing matching of [r]."""
    pts = sorted(x for arc in arcs for x in arc)
    if pts != list(range(1, r + 1)):
        raise ValueError("not a perfect matching of [r]")
    for arc1, arc2 in combinations(arcs, 2):
        a, b = sorted(arc1)
        c, e = sorted(arc2)
        if (a < c < b) != (a < e < b):
            raise ValueError(f"arcs {sorted(arc1)} and {sorted(arc2)} cross")


def matching_entry(arcs, i: int, j: int, r: int) -> tuple[int, ...]:
    """Diagram entry determined by a matching: over the window of points
    i+1 .. j (mod r), the entry is (s + t, s) with s arcs inside the window
    and t arcs crossing its boundary."""
    window = {((x - 1) % r) + 1 for x in range(i + 1, j + 1)}
    s = sum(1 for arc in arcs if arc <= window)
    t = sum(1 for arc in arcs if len(arc & window) == 1)
    return normalize((s + t, s))


def cgd_of_matching(arcs, frame: Frame) -> CylGrowthDiagram:
    """Inverse of :func:`matching_of_cgd`: rebuild row 0 from window
    counts and extend."""
    if frame.d != 2:
        raise ValueError("matchings exist only for d = 2")
    r = frame.size
    arcs = frozenset(frozenset(a) for a in arcs)
    validate_matching(arcs, r)
    chain = [matching_entry(arcs, 0, j, r) for j in range(r + 1)]
    return cgd_from_path(row_path(r), chain, frame)


def rotate_matching(arcs, r: int, step: int = 1):
    """Rotate every point of the matching by step positions around the
    circle."""
    return frozenset(frozenset(((x - 1 + step) % r) + 1 for x in arc)
                     for arc in arcs)


def noncrossing_matchings(r: int):
    """All noncrossing perfect matchings of [r]."""
    if r % 2:
        return []
    if r == 0:
        return [frozenset()]
    out = []
    for b in range(2, r + 1, 2):
        # 1 pairs with b; inside 2..b-1 and outside b+1..r are independent
        inside = _matchings_of(list(range(2, b)))
        outside = _matchings_of(list(range(b + 1, r + 1)))
        for m1 in inside:
            for m2 in outside:
                out.append(frozenset({frozenset((1, b))} | m1 | m2))
    return out


def _matchings_of(points):
    if not points:
        return [frozenset()]
    first = points[0]
    out = []
    for idx in range(1, len(points), 2):
        partner = points[idx]
        inside = _matchings_of(points[1:idx])
        outside = _matchings_of(points[idx + 1:])
        for m1 in inside:
            for m2 in outside:
                out.append(frozenset({frozenset((first, partner))} | m1 | m2))
    return out
