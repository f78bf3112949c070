"""Exact rational analysis of four-point problems with two single-box
conditions: the hypersurface equation in the Pluecker coordinates, the
explicit conic through the solutions, the circular order of the six
boundary points, and the six-step flag example with real branch points.

All arithmetic is exact over the rationals; floating point appears only in
the final root report of the flag example, after bisection on the exact
quartic."""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb

from growth.cylgrowth import cgd_enumerate
from growth.partitions import (
    Frame, added_box, complement, contains, index_set, intermediates,
    is_domino, normalize,
)


def delta(subset) -> int:
    """Product of the positive differences of the elements."""
    elems = sorted(subset)
    out = 1
    for a, b in combinations(elems, 2):
        out *= b - a
    return out


def ell(subset, d: int) -> int:
    """Sum of the elements minus the triangular offset for d rows."""
    return sum(subset) - comb(d, 2)


def wronski_polynomial(pluecker, frame: Frame):
    """Coefficients in z of the single-box condition at the point z: the
    sum over d-subsets I of delta(I) * p_I * (-z)^(d(n-d) - ell(I)).

    pluecker maps d-subsets (any iterable of ints) to coefficients; missing
    subsets count as zero.  Returns a sparse map from the power of z to the
    coefficient; powers may be negative, so the result is a polynomial only
    up to a global power of z."""
    d, n = frame.d, frame.n
    total = frame.size
    table = {}
    for subset, value in pluecker.items():
        key = frozenset(subset)
        if len(key) != d or any(not 1 <= x <= n for x in key):
            raise ValueError(f"{subset} is not a {d}-subset of [1,{n}]")
        if key in table:
            raise ValueError(f"duplicate subset {subset}")
        table[key] = value
    if all(v == 0 for v in table.values()) or not table:
        raise ValueError("all Pluecker coordinates are zero")
    coeffs = {}
    for key, value in table.items():
        power = total - ell(key, d)
        sign = -1 if power % 2 else 1
        coeffs[power] = coeffs.get(power, 0) + sign * delta(key) * value
    return {k: v for k, v in sorted(coeffs.items()) if v != 0}


@dataclass(frozen=True)
class Monomial:
    """Exact monomial c * tau^s * u^t with rational coefficient."""

    coeff: Fraction
    tau_pow: int
    u_pow: int

    def __mul__(self, other: "Monomial") -> "Monomial":
        return Monomial(self.coeff * other.coeff,
                        self.tau_pow + other.tau_pow,
                        self.u_pow + other.u_pow)

    def at(self, tau, u) -> Fraction:
        return (Fraction(self.coeff) * Fraction(tau) ** self.tau_pow
                * Fraction(u) ** self.u_pow)

    def to_json(self):
        return {"coeff": [self.coeff.numerator, self.coeff.denominator],
                "tau_pow": self.tau_pow, "u_pow": self.u_pow}


@dataclass(frozen=True)
class EmptyReport:
    """The two conditions are incompatible: the complement of one does not
    contain the other, so there are no solutions."""

    lam: tuple[int, ...]
    mu: tuple[int, ...]
    kind = "empty"


@dataclass(frozen=True)
class DegenerateReport:
    """The skew shape between the conditions is a domino: the solution
    family maps isomorphically to the base, degree one, no monodromy."""

    lam: tuple[int, ...]
    mu: tuple[int, ...]
    degree = 1
    kind = "degenerate"


@dataclass(frozen=True)
class ConicReport:
    """The generic case: two nonadjacent boxes between the conditions.

    The solutions are parametrized by the conic
    a u^2 - b u - c tau u + d' tau = 0 with (a, b, c, d') =
    (j-i-1, j-i, j-i, j-i+1), and only four Pluecker coordinates are
    nonzero."""

    frame: Frame
    lam: tuple[int, ...]
    mu: tuple[int, ...]
    s: tuple[int, ...]
    i: int
    j: int
    conic: tuple[int, int, int, int]
    pluecker: tuple[tuple[frozenset, Monomial], ...]
    labels: tuple[tuple[int, ...], ...]
    kind = "conic"

    def pluecker_map(self) -> dict:
        return dict(self.pluecker)

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "frame": {"d": self.frame.d, "n": self.frame.n},
            "lam": list(self.lam),
            "mu": list(self.mu),
            "s": list(self.s),
            "i": self.i,
            "j": self.j,
            "conic": list(self.conic),
            "pluecker": [{"subset": sorted(k), **m.to_json()}
                         for k, m in self.pluecker],
            "boundary_points": [list(p) for p in
                                boundary_points(self.j - self.i)],
            "labels": [list(p) for p in self.labels],
        }


def _split_indices(left, right):
    """Write the index sets as S+{i,j} and S+{i+1,j+1} with
    i < i+1 < j < j+1 all outside S."""
    left, right = set(left), set(right)
    shared = left & right
    low = sorted(left - shared)
    high = sorted(right - shared)
    if len(low) != 2 or len(high) != 2:
        raise ValueError("index sets do not differ in exactly two places")
    i, j = low
    if high != [i + 1, j + 1] or j <= i + 1:
        raise ValueError("index sets are not in the nonadjacent-box form")
    if {i, i + 1, j, j + 1} & shared:
        raise ValueError("shifted indices collide with the shared part")
    return tuple(sorted(shared)), i, j


def four_point_solve(lam, mu, frame: Frame):
    """Solve the problem with conditions lam, mu and two single boxes.

    Returns an EmptyReport when the complement of mu does not contain lam,
    a DegenerateReport when the skew difference is a domino, and otherwise
    the ConicReport with the conic, the four nonzero Pluecker coordinates,
    and the six boundary labels."""
    lam = normalize(lam)
    mu = normalize(mu)
    if sum(lam) + sum(mu) != frame.size - 2:
        raise ValueError("codimensions must sum to d(n-d) - 2")
    muc = complement(mu, frame)
    if not contains(muc, lam):
        return EmptyReport(lam, mu)
    if is_domino(lam, muc):
        return DegenerateReport(lam, mu)
    left = index_set(lam, frame)
    right = index_set(muc, frame)
    s, i, j = _split_indices(left, right)
    q = j - i
    shared = frozenset(s)
    sub_l = shared | {i, j}
    sub_k1 = shared | {i + 1, j}
    sub_k2 = shared | {i, j + 1}
    sub_m = shared | {i + 1, j + 1}
    pluecker = (
        (sub_l, Monomial(Fraction(1, delta(sub_l)), 0, 0)),
        (sub_k1, Monomial(Fraction(q - 1, q * delta(sub_k1)), 0, 1)),
        (sub_k2, Monomial(Fraction(q + 1, q * delta(sub_k2)), 1, -1)),
        (sub_m, Monomial(Fraction(1, delta(sub_m)), 1, 0)),
    )
    return ConicReport(frame, lam, mu, s, i, j, (q - 1, q, q, q + 1),
                       pluecker, six_point_cycle(lam, mu, frame))


def _tau_over_u(q: int, u: Fraction) -> Fraction:
    """The exact value of tau/u on the conic at the given u; the conic
    gives tau = u (q - (q-1) u) / ((q+1) - q u)."""
    den = (q + 1) - q * u
    if den == 0:
        raise ValueError("u lies on the vertical tangent")
    return (q - (q - 1) * u) / den


def boundary_points(q: int):
    """The six boundary points in circular order along the real conic,
    as (tau, u) pairs; the two asymptote ends are tagged by name.

    The slant asymptote is u = (q/(q-1)) tau + 1/(q(q-1)) and the
    horizontal asymptote is u = (q+1)/q; travelling with increasing u the
    points appear in this order."""
    return (
        ("slant_end",),
        (Fraction(0), Fraction(0)),
        (Fraction(1), Fraction(1)),
        ("horizontal_end",),
        (Fraction(0), Fraction(q, q - 1)),
        (Fraction(1), Fraction(q + 1, q - 1)),
    )


def six_point_cycle(lam, mu, frame: Frame):
    """Labels of the six boundary points in circular order.

    The label of each point is read off from which of the four Pluecker
    coordinates vanish there: vanishing of the u coordinate picks the
    northeast intermediate, vanishing of tau/u the southwest one.  The two
    points where all four survive sit between equal flanking labels and
    carry the column pair or the row pair accordingly."""
    lam = normalize(lam)
    mu = normalize(mu)
    muc = complement(normalize(mu), frame)
    if not contains(muc, lam) or sum(muc) - sum(lam) != 2 or \
            is_domino(lam, muc):
        raise ValueError("the skew difference must be two nonadjacent boxes")
    middles = intermediates(lam, muc)
    boxes = {kappa: added_box(lam, kappa) for kappa in middles}
    # the southwest box has the larger row index
    kappa1, kappa2 = sorted(middles, key=lambda k: -boxes[k][0])
    left = index_set(lam, frame)
    right = index_set(muc, frame)
    _, i, j = _split_indices(left, right)
    q = j - i
    labels = []
    for point in boundary_points(q):
        if point == ("slant_end",):
            # u grows linearly in tau, so after rescaling by u the
            # coordinate carrying tau/u dies and the southwest label shows
            labels.append(kappa1)
        elif point == ("horizontal_end",):
            # tau alone grows, killing the plain-u coordinate
            labels.append(kappa2)
        else:
            tau, u = point
            k1_value = u
            # at u = 0 the ratio tau/u is read off the conic as a limit
            k2_value = _tau_over_u(q, u) if u == 0 else tau / u
            if k1_value == 0 and k2_value == 0:
                raise ValueError("both intermediate coordinates vanish")
            if k1_value == 0:
                labels.append(kappa2)
            elif k2_value == 0:
                labels.append(kappa1)
            else:
                labels.append(None)
    for pos in (2, 5):
        before = labels[pos - 1]
        after = labels[(pos + 1) % 6]
        if labels[pos] is not None or before != after:
            raise ValueError("boundary labels do not follow the pattern")
        labels[pos] = (1, 1) if before == kappa2 else (2,)
    return tuple(labels)


def consistency_with_growth(frame: Frame) -> bool:
    """Check the six-point cycle against every enumerated growth diagram.

    For each two-step horizontal segment from gamma(i,j) to gamma(i,j+2)
    adding two nonadjacent boxes, the entry gamma(j,j+2) is the pair shape
    that the cycle places after the intermediate gamma(i,j+1)."""
    r = frame.size
    for g in cgd_enumerate(frame):
        for i in range(r):
            for m in range(r - 1):
                j = i + m
                lam = g.get(i, j)
                top = g.get(i, j + 2)
                if is_domino(lam, top):
                    continue
                cycle = six_point_cycle(lam, complement(top, frame), frame)
                middle = g.get(i, j + 1)
                if middle == cycle[1]:
                    predicted = cycle[2]
                elif middle == cycle[0]:
                    predicted = cycle[5]
                else:
                    return False
                if g.get(j, j + 2) != predicted:
                    return False
    return True


def _poly_mul(p, q):
    out = [0] * (len(p) + len(q) - 1)
    for a, x in enumerate(p):
        for b, y in enumerate(q):
            out[a + b] += x * y
    return out


def _poly_eval(coeffs, x: Fraction) -> Fraction:
    out = Fraction(0)
    for c in reversed(coeffs):
        out = out * x + c
    return out


def flag6_example() -> dict:
    """The six-step flag example with four real branch points.

    Two bilinear equations in (u, v) with a parameter tau are reduced by
    eliminating u; the resulting quadratic in v has a quartic discriminant
    in tau whose four real roots are isolated by exact bisection."""
    # 4 - 3u - 5v + 4uv = 0 and 16 - 6 tau u - 30 tau v + 12 tau^2 uv = 0;
    # substituting u = (5v - 4)/(4v - 3) and clearing denominators gives a
    # quadratic in v with these tau-coefficient rows (v^0, v^1, v^2)
    system = (((4, -3, -5, 4), (0, 0, 0, 0)),
              ((16, 0, 0, 0), (0, -6, -30, 12)))
    c0 = (-12, 6)
    c1 = (16, 15, -12)
    c2 = (0, -30, 15)
    disc = [0] * 5
    for k, v in enumerate(_poly_mul(c1, c1)):
        disc[k] += v
    for k, v in enumerate(_poly_mul(c0, c2)):
        disc[k] -= 4 * v
    quartic = tuple(disc)

    def f(x):
        return _poly_eval(quartic, x)

    roots = []
    grid = [Fraction(k, 16) for k in range(0, 48)]
    for lo, hi in zip(grid, grid[1:]):
        flo, fhi = f(lo), f(hi)
        if flo == 0:
            roots.append(lo)
            continue
        if flo * fhi < 0:
            for _ in range(60):
                mid = (lo + hi) / 2
                fmid = f(mid)
                if fmid == 0:
                    lo = hi = mid
                    break
                if flo * fmid < 0:
                    hi = mid
                else:
                    lo, flo = mid, fmid
            roots.append((lo + hi) / 2)
    return {
        "system": system,
        "eliminant": (c0, c1, c2),
        "quartic": quartic,
        "roots": tuple(float(x) for x in roots),
    }
