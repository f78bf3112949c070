"""Verification checks shared by the command line and the test suite.

Each check returns (ok, detail).  run_checks executes a named suite and
reports one line per check with its runtime."""

import time

from growth.conic import consistency_with_growth, flag6_example, four_point_solve
from growth.cylgrowth import (
    cgd_enumerate, cgd_from_path, cgd_of_matching, cgd_validate,
    matching_of_cgd, noncrossing_matchings, promotion, rotate_matching,
    row_path,
)
from growth.decgd import decgd_enumerate
from growth.goldens import golden_diagram, golden_figure_entries, load_golden
from growth.moduli import (
    Wall, all_trees, build_cover_graph, cross_cgd, facets, fiber_count,
    graph_components,
)
from growth.partitions import (
    Frame, complement, contains, is_domino, lr_coefficient, normalize,
    rectangle_syt_formula, size, syt_count,
)
from growth.tableaux import (
    dual_classes, enumerate_chains, rectify, shuffle, shuffle_classes,
)

F24 = Frame(2, 4)
F25 = Frame(2, 5)
F26 = Frame(2, 6)
BOX = (1,)


def _all_partitions(frame):
    out = []

    def build(prefix, row, limit):
        out.append(tuple(prefix))
        if row == frame.d:
            return
        for part in range(limit, 0, -1):
            build(prefix + [part], row + 1, part)

    build([], 0, frame.cols)
    return out


def _shapes_of_total(frame, r):
    parts = [p for p in _all_partitions(frame) if p]
    out = []

    def build(acc, left):
        if len(acc) == r:
            if left == 0:
                out.append(tuple(acc))
            return
        for p in parts:
            if sum(p) <= left - (r - len(acc) - 1):
                build(acc + [p], left - sum(p))

    build([], frame.size)
    return out


def check_figure_growth():
    """The packaged growth figure is rebuilt exactly from its first-row
    chain."""
    data = load_golden("growth_example")
    frame = Frame(data["frame"]["d"], data["frame"]["n"])
    chain = tuple(normalize(p) for p in data["chain"])
    path = [tuple(p) for p in data["path"]]
    g = cgd_from_path(path, chain, frame)
    for i, j, expected in golden_figure_entries("growth_example"):
        if g.get(i, j) != expected:
            return False, f"entry ({i},{j}) is {g.get(i, j)}, not {expected}"
    return True, "all figure entries reproduced"


def check_figure_wall():
    """Crossing the figure's wall maps the top diagram to the bottom one,
    and crossing again restores the top."""
    top = golden_diagram("growth_example")
    data = load_golden("wall_example")
    wall = Wall(data["wall"][0], data["wall"][1], data["r"])
    crossed = cross_cgd(top, wall)
    for i, j, expected in golden_figure_entries("wall_example"):
        if crossed.get(i, j) != expected:
            return False, f"entry ({i},{j}) is {crossed.get(i, j)}"
    if cross_cgd(crossed, wall) != top:
        return False, "crossing twice does not restore the top diagram"
    return True, "bottom figure reproduced and crossing is an involution"


def check_counts():
    """Diagram counts match the hook-length number of standard fillings of
    the rectangle."""
    for frame, expected in [(F24, 2), (F25, 5), (Frame(3, 6), 42)]:
        got = len(cgd_enumerate(frame))
        hook = rectangle_syt_formula(frame)
        chain = syt_count(frame.rectangle())
        if not got == hook == chain == expected:
            return False, (f"{frame}: enumerated {got}, hook {hook}, "
                           f"chains {chain}, expected {expected}")
    return True, "counts 2, 5, 42 agree with the hook formula"


def check_decgd_counts():
    """Class-diagram counts equal multi-factor Littlewood-Richardson
    coefficients computed by independent chain enumeration."""
    rect = F24.rectangle()
    for r in (3, 4):
        for shape in _shapes_of_total(F24, r):
            got = len(decgd_enumerate(F24, shape))
            want = lr_coefficient(rect, list(shape))
            if got != want:
                return False, f"(2,4) shape {shape}: {got} != {want}"
    samples = [((2, 2), BOX, BOX), ((2, 1), (2,), BOX), ((3, 1), BOX, BOX),
               ((1, 1), (2,), (2,)), ((2,), (2,), BOX, BOX)]
    for shape in samples:
        got = len(decgd_enumerate(F25, shape))
        want = lr_coefficient(F25.rectangle(), list(shape))
        if got != want:
            return False, f"(2,5) shape {shape}: {got} != {want}"
    return True, "all counts match the Littlewood-Richardson oracle"


def check_conic_g24():
    """The two-box problem in the 2x2 frame yields the expected conic and
    u-discriminant, exactly."""
    report = four_point_solve(BOX, BOX, F24)
    if getattr(report, "conic", None) != (1, 2, 2, 3):
        return False, f"conic coefficients {getattr(report, 'conic', None)}"
    a, b, c, d = report.conic
    # ((b + c tau)^2 - 4 a d tau) as coefficients in tau
    disc = (b * b, 2 * b * c - 4 * a * d, c * c)
    if disc != (4, -4, 4):
        return False, f"u-discriminant {disc}, expected 4(tau^2 - tau + 1)"
    return True, "conic u^2 - 2u - 2 tau u + 3 tau with discriminant " \
        "4(tau^2 - tau + 1)"


def check_six_point():
    """The boundary labels follow the six-point pattern everywhere, and
    agree with the enumerated growth diagrams."""
    for frame in (F24, F25, F26):
        for lam in _all_partitions(frame):
            for mu in _all_partitions(frame):
                if size(lam) + size(mu) != frame.size - 2:
                    continue
                muc = complement(mu, frame)
                if not contains(muc, lam) or is_domino(lam, muc):
                    continue
                report = four_point_solve(lam, mu, frame)
                cycle = report.labels
                ok = (cycle[0] == cycle[4] and cycle[1] == cycle[3]
                      and cycle[2] == (1, 1) and cycle[5] == (2,))
                if not ok:
                    return False, f"{frame} {lam},{mu}: cycle {cycle}"
    for frame in (F24, F25):
        if not consistency_with_growth(frame):
            return False, f"growth consistency fails on {frame}"
    return True, "pattern holds in frames (2,4)-(2,6), growth-consistent"


def check_flag6():
    """The six-step flag example has the expected quartic and real
    roots."""
    result = flag6_example()
    if result["quartic"] != (256, -960, 1281, -720, 144):
        return False, f"quartic {result['quartic']}"
    expected = [0.678121, 0.945553, 1.41011, 1.96622]
    roots = result["roots"]
    if len(roots) != 4 or any(abs(g - w) > 1e-4
                              for g, w in zip(roots, expected)):
        return False, f"roots {roots}"
    return True, "quartic (256,-960,1281,-720,144), four real roots"


def check_cover_r4():
    """The cover over the three facets with four single boxes is one
    six-cycle."""
    graph = build_cover_graph(F24, [BOX] * 4)
    if len(graph.nodes) != 6 or len(graph.edges) != 6:
        return False, f"{len(graph.nodes)} nodes, {len(graph.edges)} edges"
    if graph_components(graph) != 1:
        return False, "not connected"
    if len({facet for facet, _ in graph.nodes}) != len(facets(4)):
        return False, "nodes do not cover all three facets"
    degree = {}
    for u, v, _ in graph.edges:
        degree[u] = degree.get(u, 0) + 1
        degree[v] = degree.get(v, 0) + 1
    if set(degree.values()) != {2}:
        return False, "not a single cycle"
    return True, "single 6-cycle over 3 facets"


def check_properties():
    """Structural properties with no single printed number: shuffle
    involution, rectification path independence, class counts, glide
    reflection, the domino rule, promotion order, the arc bijection with
    rotation as promotion, and tree independence of fiber counts."""
    # shuffle involution on all composable class pairs in the 2x2 frame
    parts = _all_partitions(F24)
    for inner in parts:
        for mid in parts:
            if not contains(mid, inner):
                continue
            for outer in parts:
                if not contains(outer, mid):
                    continue
                for x in dual_classes(mid, inner):
                    for y in dual_classes(outer, mid):
                        if shuffle_classes(*shuffle_classes(x, y)) != (x, y):
                            return False, "shuffle is not an involution"
    # rectification is independent of the straight tableau shuffled in
    for inner in parts:
        for outer in parts:
            if not inner or not contains(outer, inner) or inner == outer:
                continue
            for t in enumerate_chains(outer, inner):
                results = {shuffle(alpha, t)[0]
                           for alpha in enumerate_chains(inner, ())}
                if len(results) != 1 or results.pop() != rectify(t):
                    return False, f"rectification differs for {t}"
    # dual-class counts are Littlewood-Richardson coefficients
    for inner in parts:
        for outer in parts:
            if not contains(outer, inner):
                continue
            for target in parts:
                if size(target) != size(outer) - size(inner):
                    continue
                got = len(dual_classes(outer, inner, target))
                want = lr_coefficient(outer, [inner, target])
                if got != want:
                    return False, f"{outer}/{inner} content {target}: " \
                        f"{got} != {want}"
    for frame in (F24, F25):
        diagrams = cgd_enumerate(frame)
        r = frame.size
        for g in diagrams:
            # glide reflection
            for i in range(r):
                for k in range(r + 1):
                    if g.get(i, i + k) != complement(g.get(i + k, i + r),
                                                     frame):
                        return False, f"glide reflection fails in {frame}"
            # domino rule on every two-step segment
            for i in range(r):
                for j in range(i, i + r - 1):
                    lam, mid, nu = (g.get(i, j), g.get(i, j + 1),
                                    g.get(i, j + 2))
                    first = [row for row in range(len(mid))
                             if mid[row] > (lam[row] if row < len(lam)
                                            else 0)][0]
                    second = [row for row in range(len(nu))
                              if nu[row] > (mid[row] if row < len(mid)
                                            else 0)][0]
                    # second box weakly north (same row means east) gives
                    # the row pair, strictly south gives the column pair
                    expected = (2,) if second <= first else (1, 1)
                    if g.get(j, j + 2) != expected:
                        return False, f"domino rule fails in {frame}"
            # promotion applied r times is the identity
            t = g.row(0)
            for _ in range(r):
                t = promotion(t, frame)
            if t != g.row(0):
                return False, f"promotion order does not divide {r}"
        # arc bijection round trip and rotation as promotion
        matchings = {frozenset(m) for m in noncrossing_matchings(r)}
        seen = set()
        for g in diagrams:
            m = matching_of_cgd(g)
            if cgd_of_matching(m, frame) != g:
                return False, f"arc bijection fails in {frame}"
            promoted = cgd_from_path(row_path(r), promotion(g.row(0), frame),
                                     frame)
            if matching_of_cgd(promoted) != rotate_matching(m, r, -1):
                return False, f"rotation is not promotion in {frame}"
            seen.add(m)
        if seen != matchings:
            return False, f"arc bijection misses matchings in {frame}"
    # fiber counts do not depend on the tree
    cases = [(F24, [BOX] * 4), (F24, [(2,), BOX, BOX]),
             (F25, [(2,), BOX, BOX, BOX, BOX]), (F25, [(2,), (2,), BOX, BOX]),
             (F25, [(1, 1), (2,), BOX, BOX])]
    for frame, shape in cases:
        r = len(shape)
        expected = lr_coefficient(frame.rectangle(), shape)
        for tree in all_trees(r):
            if fiber_count(tree, shape, frame) != expected:
                return False, f"fiber count varies over trees for {shape}"
    return True, "shuffle, rectification, class counts, glide, domino, " \
        "promotion, matchings, fiber counts all hold"


CHECKS = (
    ("figure-growth", "growth", check_figure_growth),
    ("figure-wall", "growth", check_figure_wall),
    ("counts", "growth", check_counts),
    ("decgd-counts", "growth", check_decgd_counts),
    ("conic-g24", "conic", check_conic_g24),
    ("six-point", "conic", check_six_point),
    ("flag6", "conic", check_flag6),
    ("cover-r4", "growth", check_cover_r4),
    ("properties", "growth", check_properties),
)

SUITES = ("growth", "conic")


def run_checks(only=None):
    """Run all checks, or one suite; returns (name, ok, detail, seconds)."""
    if only is not None and only not in SUITES:
        raise ValueError(f"unknown suite {only!r}; choose from {SUITES}")
    results = []
    for name, suite, fn in CHECKS:
        if only is not None and suite != only:
            continue
        start = time.monotonic()
        ok, detail = fn()
        results.append((name, ok, detail, time.monotonic() - start))
    return results
