"""Facet combinatorics of the real moduli of r marked stable rational
curves, wall crossings on (class) growth diagrams, the monodromy graph of
the covering, and tree labelings with fiber counts.

A facet is a dihedral class of circular orders of [r], stored canonically:
the representative starts at 1 and takes the lexicographically smaller
direction.  A wall is the chord reversing a circular interval of marked
positions; it is identified with the complementary interval."""

import json
from dataclasses import dataclass
from itertools import permutations

from growth.cylgrowth import (
    CylGrowthDiagram, _Completion, cgd_enumerate, cgd_from_path,
)
from growth.decgd import (
    Decgd, _iota, decgd_enumerate, lift_decgd, restrict_cgd,
)
from growth.partitions import Frame, complement, lr_coefficient, normalize


# ---------------------------------------------------------------------------
# circular orders (facets) and walls

def canonical_order(order):
    """Canonical dihedral representative of a circular order, plus the
    0-based index map g with order[g(q)] = canonical[q] (a rotation or a
    reflection of positions)."""
    order = tuple(order)
    r = len(order)
    t = order.index(1)
    rot = tuple(order[(q + t) % r] for q in range(r))
    ref = tuple(order[(t - q) % r] for q in range(r))
    if rot <= ref:
        return rot, ("rot", t)
    return ref, ("ref", t)


def apply_index_map(g, q: int, r: int) -> int:
    """Evaluate a transporter from :func:`canonical_order` on a 0-based
    position."""
    kind, t = g
    return (q + t) % r if kind == "rot" else (t - q) % r


def facets(r: int):
    """All facets of the moduli space: canonical circular orders of [r]."""
    if r < 3:
        raise ValueError("need at least 3 marked points")
    seen = set()
    for tail in permutations(range(2, r + 1)):
        seen.add(canonical_order((1,) + tail)[0])
    return sorted(seen)


@dataclass(frozen=True)
class Wall:
    """The chord reversing circular positions a..b (1-based, inclusive;
    b may exceed r to denote a wrapped interval)."""

    a: int
    b: int
    r: int

    def __post_init__(self):
        length = self.b - self.a + 1
        if not (2 <= length <= self.r - 2):
            raise ValueError(
                f"reversed interval must have length 2..{self.r - 2}, "
                f"got {length}")
        if not (1 <= self.a <= self.r):
            raise ValueError("interval start must lie in [1, r]")

    @property
    def positions(self) -> frozenset[int]:
        return frozenset(((x - 1) % self.r) + 1
                         for x in range(self.a, self.b + 1))

    def complementary(self) -> "Wall":
        """The same chord presented from the other side."""
        start = self.b + 1
        end = self.a + self.r - 1
        if start > self.r:
            start -= self.r
            end -= self.r
        return Wall(start, end, self.r)


def walls(r: int):
    """One representative per chord: canonical (a, b) with the interval
    not wrapping, preferring the lexicographically smaller presentation."""
    seen = {}
    for a in range(1, r + 1):
        for b in range(a + 1, r + 1):
            if not (2 <= b - a + 1 <= r - 2):
                continue
            w = Wall(a, b, r)
            key = frozenset((w.positions, frozenset(range(1, r + 1)) - w.positions))
            if key not in seen or (w.a, w.b) < (seen[key].a, seen[key].b):
                seen[key] = w
    return sorted(seen.values(), key=lambda w: (w.a, w.b))


def cross_facet(order, wall: Wall):
    """Reverse the marked points on the wall's interval and canonicalize;
    returns (new_order, transporter) with the transporter mapping raw
    crossed positions to canonical ones."""
    order = tuple(order)
    r = len(order)
    raw = list(order)
    span = [((x - 1) % r) for x in range(wall.a, wall.b + 1)]
    vals = [order[q] for q in span]
    for q, v in zip(span, reversed(vals)):
        raw[q] = v
    return canonical_order(raw)


# ---------------------------------------------------------------------------
# wall crossing on diagrams

def cross_cgd(g: CylGrowthDiagram, wall: Wall) -> CylGrowthDiagram:
    """Cross a wall: the new diagram agrees with g on the triangle over
    the reversed interval and is its reflection across the short diagonal
    on the complementary triangle; everything else is recomputed by the
    growth recursion."""
    r = g.r
    if wall.r != r:
        raise ValueError("wall and diagram have different periods")
    a, b = wall.a, wall.b
    solver = _Completion(g.frame, r)
    for i in range(a, b + 2):
        for j in range(i, b + 2):
            solver.seed_point(i, j, g.get(i, j))
    for i in range(b + 1, a + r + 1):
        for j in range(i, a + r + 1):
            solver.seed_point(i, j, g.get(a + b + 1 - j, a + b + 1 - i))
    return solver.solve()


def _glide_rep(cls, frame: Frame):
    """Representative of the glide image of a class: the complemented,
    reversed chain."""
    return tuple(complement(p, frame) for p in reversed(cls.representative))


def cross_decgd(d: Decgd, wall: Wall) -> Decgd:
    """Cross a wall on a class diagram.

    The crossed diagram agrees with d on the triangle over the wall and is
    the short-diagonal reflection of d on the complementary triangle, for
    classes as well as entries (reflection exchanges row and column
    classes).  The remaining cells follow by extending chosen lifts of the
    classes along a path through the known region, then restricting."""
    r = d.r
    if wall.r != r:
        raise ValueError("wall and diagram have different periods")
    a, b = wall.a, wall.b
    frame = d.frame
    total = frame.size
    sizes = d.sizes
    # wall blocks a+1..b+1 keep their sizes, the complement reverses
    new_sizes = list(sizes)
    for m in range(b + 2, a + r + 1):
        new_sizes[(m - 1) % r] = sizes[(a + b + 1 - m) % r]
    # path: right along row b+1 (reflected classes are the old column
    # classes), then up the column a+r (glide images of row a classes)
    reps = []
    for l in range(b + 1, a + r):
        reps.append(d.get_b(a + b + 1 - l, a).representative)
    for k in range(b + 1, a, -1):
        reps.append(_glide_rep(d.get_a(a, k - 1), frame))
    chain = list(reps[0])
    for t in reps[1:]:
        if t[0] != chain[-1]:
            raise ValueError("wall crossing produced a broken chain")
        chain.extend(t[1:])
    iota = _iota(tuple(new_sizes), total)
    row = iota(b + 1)
    top = iota(a)
    col = top + total
    path = [(row, row + i) for i in range(col - row + 1)]
    path += [(row - i, col) for i in range(1, row - top + 1)]
    fine = cgd_from_path(path, tuple(chain), frame)
    return restrict_cgd(fine, tuple(new_sizes))


# ---------------------------------------------------------------------------
# dihedral transport of diagrams

def rotate_cgd(g: CylGrowthDiagram, t: int) -> CylGrowthDiagram:
    """Shift marked positions: entry (i, j) of the result is entry
    (i + t, j + t) of g."""
    r = g.r
    rows = tuple(tuple(g.get(i + t, i + t + k) for k in range(r + 1))
                 for i in range(r))
    return CylGrowthDiagram(g.frame, r, rows)


def reflect_cgd(g: CylGrowthDiagram, e: int) -> CylGrowthDiagram:
    """Reverse marked positions around e (0-based): entry (i, j) of the
    result is entry (e + 1 - j, e + 1 - i) of g."""
    r = g.r
    rows = tuple(tuple(g.get(e + 1 - (i + k), e + 1 - i) for k in range(r + 1))
                 for i in range(r))
    return CylGrowthDiagram(g.frame, r, rows)


def transport_cgd(g: CylGrowthDiagram, gmap) -> CylGrowthDiagram:
    # order position q corresponds to window element q + 1, so the order
    # reflection q -> t - q acts on entries with axis t + 2
    kind, t = gmap
    return rotate_cgd(g, t) if kind == "rot" else reflect_cgd(g, t + 2)


def rotate_decgd(d: Decgd, t: int) -> Decgd:
    r = d.r
    gamma = tuple(tuple(d.get_gamma(k + t, k + t + m) for m in range(r + 1))
                  for k in range(r))
    a = tuple(tuple(d.get_a(k + t, k + t + m) for m in range(r))
              for k in range(r))
    b = tuple(tuple(d.get_b(k + t, k + t + m) for m in range(r))
              for k in range(r))
    shape = tuple(a[0][m].rshape for m in range(r))
    return Decgd(d.frame, r, shape, gamma, a, b)


def reflect_decgd(d: Decgd, e: int) -> Decgd:
    """Reflection swaps the roles of row and column classes."""
    r = d.r
    gamma = tuple(tuple(d.get_gamma(e + 1 - (k + m), e + 1 - k)
                        for m in range(r + 1)) for k in range(r))
    a = tuple(tuple(d.get_b(e + 1 - (k + m), e + 1 - k) for m in range(r))
              for k in range(r))
    b = tuple(tuple(d.get_a(e + 1 - (k + m), e + 1 - k) for m in range(r))
              for k in range(r))
    shape = tuple(a[0][m].rshape for m in range(r))
    return Decgd(d.frame, r, shape, gamma, a, b)


def transport_decgd(d: Decgd, gmap) -> Decgd:
    kind, t = gmap
    return rotate_decgd(d, t) if kind == "rot" else reflect_decgd(d, t + 2)


# ---------------------------------------------------------------------------
# the monodromy graph

@dataclass(frozen=True)
class MonodromyGraph:
    frame: Frame
    shape: tuple[tuple[int, ...], ...]
    nodes: tuple  # (facet, diagram) pairs
    edges: tuple  # (from_id, to_id, wall (a, b)) triples


def _fiber(frame: Frame, shape, facet, all_box: bool):
    """Diagrams over one facet: contents permuted by the facet's order.

    Window element m + 1 carries the condition of the marked point at
    order position m, so block m holds the condition of facet[m - 1]."""
    if all_box:
        return cgd_enumerate(frame)
    r = len(facet)
    permuted = [shape[facet[(m - 1) % r] - 1] for m in range(r)]
    return decgd_enumerate(frame, permuted)


def build_cover_graph(frame: Frame, shape) -> MonodromyGraph:
    """Nodes are (facet, diagram) pairs; edges join nodes related by
    crossing a wall.  Fiber size over every facet is the multi-factor
    Littlewood-Richardson coefficient of the shape."""
    shape = tuple(normalize(lam) for lam in shape)
    r = len(shape)
    if r < 3:
        raise ValueError("need at least 3 conditions")
    all_box = all(lam == (1,) for lam in shape)
    if sum(sum(lam) for lam in shape) != frame.size:
        return MonodromyGraph(frame, shape, (), ())
    facet_list = facets(r)
    wall_list = walls(r)
    nodes = []
    index = {}
    for facet in facet_list:
        for diagram in _fiber(frame, shape, facet, all_box):
            index[(facet, diagram)] = len(nodes)
            nodes.append((facet, diagram))
    cross = cross_cgd if all_box else cross_decgd
    transport = transport_cgd if all_box else transport_decgd
    edges = {}
    for node_id, (facet, diagram) in enumerate(nodes):
        for wall in wall_list:
            new_facet, _ = cross_facet(facet, wall)
            # the crossed diagram keeps the wall blocks in place and
            # reflects the complementary blocks, so its raw presentation is
            # the order with the complementary span reversed
            _, gmap = cross_facet(facet, wall.complementary())
            target = transport(cross(diagram, wall), gmap)
            target_id = index[(new_facet, target)]
            chord = frozenset(facet[(x - 1) % r] for x in
                              range(wall.a, wall.b + 1))
            chord = min(chord, frozenset(range(1, r + 1)) - chord,
                        key=sorted)
            key = (frozenset((node_id, target_id)), chord)
            edges.setdefault(key, (node_id, target_id, (wall.a, wall.b)))
    ordered = sorted(edges.values())
    return MonodromyGraph(frame, shape, tuple(nodes), tuple(ordered))


def graph_components(graph: MonodromyGraph) -> int:
    parent = list(range(len(graph.nodes)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v, _ in graph.edges:
        parent[find(u)] = find(v)
    return len({find(x) for x in range(len(graph.nodes))})


def graph_to_json(graph: MonodromyGraph) -> dict:
    nodes = []
    for facet, diagram in graph.nodes:
        entry = {"facet": list(facet)}
        entry["diagram"] = diagram.to_json()
        nodes.append(entry)
    return {
        "frame": {"d": graph.frame.d, "n": graph.frame.n},
        "shape": [list(lam) for lam in graph.shape],
        "nodes": nodes,
        "edges": [{"from": u, "to": v, "wall": [a, b]}
                  for u, v, (a, b) in graph.edges],
    }


def graph_to_dot(graph: MonodromyGraph) -> str:
    lines = ["graph cover {"]
    for i, (facet, _) in enumerate(graph.nodes):
        label = "".join(str(x) for x in facet)
        lines.append(f'  n{i} [label="{label}/{i}"];')
    for u, v, (a, b) in graph.edges:
        lines.append(f'  n{u} -- n{v} [label="{a},{b}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def export(graph: MonodromyGraph, fmt: str) -> bytes:
    """Deterministic serialization of the graph."""
    if fmt == "json":
        return (json.dumps(graph_to_json(graph), indent=2, sort_keys=True)
                + "\n").encode()
    if fmt == "dot":
        return graph_to_dot(graph).encode()
    raise ValueError(f"unknown format {fmt!r}")


# ---------------------------------------------------------------------------
# trees, node labelings, fiber counts

@dataclass(frozen=True)
class LabeledTree:
    """A tree with leaves 1..r and internal vertices of degree >= 3,
    given by its adjacency map.  Internal vertices are negative ints."""

    r: int
    adj: tuple  # sorted tuple of (vertex, sorted tuple of neighbours)

    def neighbours(self, v):
        return dict(self.adj)[v]

    @property
    def internal_vertices(self):
        return [v for v, _ in self.adj if v < 0]

    @property
    def internal_edges(self):
        out = []
        for v, nbrs in self.adj:
            for w in nbrs:
                if v < w < 0 or (w < v < 0):
                    e = (min(v, w), max(v, w))
                    if e not in out:
                        out.append(e)
        return out

    @staticmethod
    def from_adjacency(adj_map: dict) -> "LabeledTree":
        r = sum(1 for v in adj_map if v > 0)
        adj = tuple(sorted((v, tuple(sorted(ns))) for v, ns in adj_map.items()))
        return LabeledTree(r, adj)


def star_tree(r: int) -> LabeledTree:
    adj = {-1: list(range(1, r + 1))}
    for leaf in range(1, r + 1):
        adj[leaf] = [-1]
    return LabeledTree.from_adjacency(adj)


def caterpillar_tree(r: int) -> LabeledTree:
    """Internal path -1 .. -(r-2); leaf 1 on the first internal vertex,
    leaf r on the last, leaf k+1 on vertex -k."""
    if r < 4:
        return star_tree(r)
    inner = [-k for k in range(1, r - 1)]
    adj = {v: [] for v in inner}
    for u, v in zip(inner, inner[1:]):
        adj[u].append(v)
        adj[v].append(u)
    adj[1] = [inner[0]]
    adj[inner[0]].append(1)
    adj[r] = [inner[-1]]
    adj[inner[-1]].append(r)
    for k in range(1, r - 1):
        adj[k + 1] = [-k]
        adj[-k].append(k + 1)
    return LabeledTree.from_adjacency(adj)


def all_trees(r: int):
    """Every tree with leaves [r] and internal degrees >= 3, built by
    attaching leaves one at a time."""
    base = star_tree(3)
    trees = [{v: list(ns) for v, ns in base.adj}]
    for leaf in range(4, r + 1):
        grown = []
        for adj in trees:
            internal = [v for v in adj if v < 0]
            next_id = min(internal) - 1
            # attach to an existing internal vertex
            for v in internal:
                new = {u: list(ns) for u, ns in adj.items()}
                new[v].append(leaf)
                new[leaf] = [v]
                grown.append(new)
            # or subdivide an edge with a new internal vertex
            seen_edges = set()
            for u in adj:
                for v in adj[u]:
                    e = (min(u, v), max(u, v))
                    if e in seen_edges:
                        continue
                    seen_edges.add(e)
                    new = {x: list(ns) for x, ns in adj.items()}
                    new[u].remove(v)
                    new[v].remove(u)
                    new[next_id] = [u, v, leaf]
                    new[u].append(next_id)
                    new[v].append(next_id)
                    new[leaf] = [next_id]
                    grown.append(new)
        trees = grown
    return [LabeledTree.from_adjacency(adj) for adj in trees]


def node_labelings(tree: LabeledTree, shape, frame: Frame):
    """All assignments of a partition to each (internal vertex, incident
    edge) pair such that leaf edges carry the leaf's condition, the two
    sides of an internal edge are complementary, every internal vertex has
    total size d(n-d), and every internal vertex admits at least one
    tableau filling."""
    shape = tuple(normalize(lam) for lam in shape)
    if sum(sum(lam) for lam in shape) != frame.size:
        return []
    from growth.partitions import shapes_between
    all_parts = []
    for s in range(frame.size + 1):
        all_parts.extend(shapes_between((), frame.rectangle(), s))
    internal_edges = tree.internal_edges
    labelings = []

    def vertex_ok(assign, v, complete: bool):
        total = 0
        for w in tree.neighbours(v):
            if w > 0:
                total += sum(shape[w - 1])
            else:
                e = (min(v, w), max(v, w))
                if e not in assign:
                    return not complete
                nu = assign[e] if v == e[0] else complement(assign[e], frame)
                total += sum(nu)
        return total == frame.size if complete else total <= frame.size

    def build(idx, assign):
        if idx == len(internal_edges):
            if all(vertex_ok(assign, v, True)
                   for v in tree.internal_vertices):
                out = {}
                for v in tree.internal_vertices:
                    for w in tree.neighbours(v):
                        if w > 0:
                            out[(v, w)] = shape[w - 1]
                        else:
                            e = (min(v, w), max(v, w))
                            out[(v, w)] = (assign[e] if v == e[0]
                                           else complement(assign[e], frame))
                # a labeling must admit a tableau at every internal vertex
                for v in tree.internal_vertices:
                    incident = [out[(v, w)] for w in tree.neighbours(v)]
                    if lr_coefficient(frame.rectangle(), incident) == 0:
                        return
                labelings.append(out)
            return
        e = internal_edges[idx]
        for nu in all_parts:
            assign[e] = nu
            if vertex_ok(assign, e[0], False) and vertex_ok(assign, e[1], False):
                build(idx + 1, assign)
            del assign[e]

    build(0, {})
    return labelings


def fiber_count(tree: LabeledTree, shape, frame: Frame) -> int:
    """Sum over labelings of the product of per-vertex multi-factor
    Littlewood-Richardson coefficients; independent of the tree."""
    shape = tuple(normalize(lam) for lam in shape)
    total = 0
    for labeling in node_labelings(tree, shape, frame):
        prod = 1
        for v in tree.internal_vertices:
            incident = [labeling[(v, w)] for w in tree.neighbours(v)]
            prod *= lr_coefficient(frame.rectangle(), incident)
            if prod == 0:
                break
        total += prod
    return total
