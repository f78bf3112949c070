"""Cylindrical growth diagrams of dual-equivalence classes: restriction
from fine diagrams, lifting, first-row construction, enumeration, and
validation.

A diagram of r conditions stores the coarse entries gamma(k, l) for
0 <= l - k <= r together with the class a(k, l) of the row step
gamma(k, l) -> gamma(k, l+1) and the class b(k, l) of the column step
gamma(k, l) -> gamma(k-1, l), both for 0 <= l - k < r.  Everything is
periodic under (k, l) -> (k+r, l+r) and stored on residues of k."""

from dataclasses import dataclass

from growth.cylgrowth import CylGrowthDiagram, cgd_from_path, row_path
from growth.partitions import Frame, normalize, shapes_between
from growth.tableaux import (
    DualClass, dual_classes, dual_equivalent, shuffle_classes, validate_chain,
)


@dataclass(frozen=True)
class Decgd:
    """Growth diagram of dual-equivalence classes.

    gamma[k][m] is the entry at (k, k+m) for k in [0, r), m in [0, r];
    a[k][m] and b[k][m] are the classes at (k, k+m) for m in [0, r)."""

    frame: Frame
    r: int
    shape: tuple[tuple[int, ...], ...]
    gamma: tuple[tuple[tuple[int, ...], ...], ...]
    a: tuple[tuple[DualClass, ...], ...]
    b: tuple[tuple[DualClass, ...], ...]

    def get_gamma(self, k: int, l: int) -> tuple[int, ...]:
        m = l - k
        if not (0 <= m <= self.r):
            raise IndexError(f"({k},{l}) outside the diagram band")
        return self.gamma[k % self.r][m]

    def get_a(self, k: int, l: int) -> DualClass:
        m = l - k
        if not (0 <= m < self.r):
            raise IndexError(f"a({k},{l}) undefined")
        return self.a[k % self.r][m]

    def get_b(self, k: int, l: int) -> DualClass:
        m = l - k
        if not (0 <= m < self.r):
            raise IndexError(f"b({k},{l}) undefined")
        return self.b[k % self.r][m]

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(sum(lam) for lam in self.shape)

    def to_json(self) -> dict:
        return {
            "frame": {"d": self.frame.d, "n": self.frame.n},
            "r": self.r,
            "shape": [list(lam) for lam in self.shape],
            "rows": [[list(p) for p in row] for row in self.gamma],
            "a": [[[list(p) for p in cls.representative] for cls in row]
                  for row in self.a],
            "b": [[[list(p) for p in cls.representative] for cls in row]
                  for row in self.b],
        }

    @staticmethod
    def from_json(data: dict) -> "Decgd":
        frame = Frame(data["frame"]["d"], data["frame"]["n"])

        def cls_of(chain):
            return DualClass.of(validate_chain(chain))

        return Decgd(
            frame, data["r"],
            tuple(normalize(lam) for lam in data["shape"]),
            tuple(tuple(normalize(p) for p in row) for row in data["rows"]),
            tuple(tuple(cls_of(c) for c in row) for row in data["a"]),
            tuple(tuple(cls_of(c) for c in row) for row in data["b"]),
        )


def _iota(sizes: tuple[int, ...], total: int):
    """Cumulative index map: iota(m) for any integer m, with
    iota(m + r) = iota(m) + total."""
    r = len(sizes)
    prefix = [0]
    for s in sizes:
        prefix.append(prefix[-1] + s)

    def iota(m: int) -> int:
        return (m // r) * total + prefix[m % r]

    return iota


def restrict_cgd(fine: CylGrowthDiagram, sizes) -> Decgd:
    """Restrict a fine diagram to the sublattice marked off by sizes: the
    coarse entries are fine entries at the cumulative indices, and the
    classes are the dual-equivalence classes of the fine sub-chains along
    rows and columns."""
    sizes = tuple(int(s) for s in sizes)
    if any(s <= 0 for s in sizes):
        raise ValueError("sizes must be positive")
    total = fine.frame.size
    if sum(sizes) != total:
        raise ValueError(
            f"sizes {sizes} must sum to d(n-d) = {total}")
    r = len(sizes)
    iota = _iota(sizes, total)
    gamma = tuple(
        tuple(fine.get(iota(k), iota(k + m)) for m in range(r + 1))
        for k in range(r))
    a_rows = []
    b_rows = []
    for k in range(r):
        a_row = []
        b_row = []
        for m in range(r):
            l = k + m
            row_chain = tuple(fine.get(iota(k), j)
                              for j in range(iota(l), iota(l + 1) + 1))
            a_row.append(DualClass.of(row_chain))
            col_chain = tuple(fine.get(i, iota(l))
                              for i in range(iota(k), iota(k - 1) - 1, -1))
            b_row.append(DualClass.of(col_chain))
        a_rows.append(tuple(a_row))
        b_rows.append(tuple(b_row))
    shape = tuple(a_rows[0][m].rshape for m in range(r))
    return Decgd(fine.frame, r, shape, gamma, tuple(a_rows), tuple(b_rows))


def lift_decgd(d: Decgd, reps=None) -> CylGrowthDiagram:
    """A fine diagram restricting to d: concatenate representatives of the
    row-0 classes (canonical ones unless reps are given) along row 0 and
    extend."""
    if reps is None:
        reps = [d.a[0][m].representative for m in range(d.r)]
    else:
        reps = [validate_chain(t) for t in reps]
        for m, t in enumerate(reps):
            if not dual_equivalent(t, d.a[0][m].representative):
                raise ValueError(
                    f"representative {m} is not in the stated class")
    chain = list(reps[0])
    for t in reps[1:]:
        if t[0] != chain[-1]:
            raise ValueError("representatives do not concatenate")
        chain.extend(t[1:])
    total = d.frame.size
    return cgd_from_path(row_path(total), tuple(chain), d.frame)


def decgd_from_first_row(mu_chain, classes, frame: Frame) -> Decgd:
    """The unique diagram whose row 0 has the given coarse chain and
    classes: lift along row 0 and restrict."""
    mu_chain = tuple(normalize(p) for p in mu_chain)
    classes = tuple(classes)
    r = len(classes)
    if len(mu_chain) != r + 1:
        raise ValueError("need one more chain entry than classes")
    if mu_chain[0] != () or mu_chain[-1] != frame.rectangle():
        raise ValueError("chain must run from the empty shape to the rectangle")
    for m, cls in enumerate(classes):
        if cls.inner != mu_chain[m] or cls.outer != mu_chain[m + 1]:
            raise ValueError(f"class {m} has shape {cls.outer}/{cls.inner}, "
                             f"expected {mu_chain[m + 1]}/{mu_chain[m]}")
    fine = cgd_from_path(
        row_path(frame.size),
        sum((cls.representative[1:] for cls in classes), ((),)),
        frame)
    d = restrict_cgd(fine, tuple(sum(c.rshape) for c in classes))
    return d


def decgd_validate(d: Decgd) -> tuple[bool, list[str]]:
    """Check anchors, class shapes, first-row rectification shapes, and the
    shuffle condition on every unit cell."""
    problems = []
    r = d.r
    for k in range(r):
        if d.gamma[k][0] != ():
            problems.append(f"row {k}: diagonal entry not empty")
        if d.gamma[k][r] != d.frame.rectangle():
            problems.append(f"row {k}: offset {r} is not the rectangle")
        for m in range(r):
            a = d.a[k][m]
            if a.inner != d.gamma[k][m] or a.outer != d.get_gamma(k, k + m + 1):
                problems.append(f"a({k},{k + m}) has the wrong shape")
            b = d.b[k][m]
            if b.inner != d.gamma[k][m] or \
                    b.outer != d.get_gamma(k - 1, k + m):
                problems.append(f"b({k},{k + m}) has the wrong shape")
        if d.a[0][k].rshape != d.shape[k % r]:
            problems.append(f"first-row class {k} has the wrong content")
    for k in range(r):
        for m in range(r - 1):
            l = k + m
            got = shuffle_classes(d.get_a(k, l), d.get_b(k, l + 1))
            want = (d.get_b(k, l), d.get_a(k - 1, l))
            if got != want:
                problems.append(f"shuffle condition fails at ({k},{l})")
    return (not problems, problems)


def decgd_enumerate(frame: Frame, shape) -> list[Decgd]:
    """All diagrams with the given sequence of contents, one per choice of
    first-row chain and classes, ordered by the first row."""
    shape = tuple(normalize(lam) for lam in shape)
    r = len(shape)
    if r < 3:
        raise ValueError("need at least 3 conditions")
    total = frame.size
    if sum(sum(lam) for lam in shape) != total:
        # no diagram can exist unless the sizes sum to d(n-d)
        return []
    results = []

    def build(mu_chain, classes):
        m = len(classes)
        if m == r:
            results.append(decgd_from_first_row(mu_chain, classes, frame))
            return
        target = sum(sum(lam) for lam in shape[:m + 1])
        for nu in sorted(shapes_between(mu_chain[-1], frame.rectangle(),
                                        target)):
            for cls in dual_classes(nu, mu_chain[-1], shape[m]):
                build(mu_chain + [nu], classes + [cls])

    build([()], [])
    return results
