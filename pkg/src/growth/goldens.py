"""Access to the packaged reference diagrams and conversion of the printed
row layout (rows 1..7, row t spanning (t, t)..(t, t+r)) into
:class:`~growth.cylgrowth.CylGrowthDiagram` values."""

import json
from importlib import resources

from growth.partitions import Frame, normalize
from growth.cylgrowth import CylGrowthDiagram, cgd_validate


def load_golden(name: str) -> dict:
    """Load a packaged reference file: 'growth_example' or 'wall_example'."""
    text = resources.files("growth.data").joinpath(f"{name}.json").read_text()
    return json.loads(text)


def golden_diagram(name: str) -> CylGrowthDiagram:
    """The reference diagram as a value, folded into the fundamental
    domain rows 0..r-1 through the (i, j) -> (i+r, j+r) periodicity."""
    data = load_golden(name)
    frame = Frame(data["frame"]["d"], data["frame"]["n"])
    r = data["r"]
    start = data["figure_start_row"]
    by_residue: dict[int, tuple] = {}
    for offset, row in enumerate(data["figure_rows"]):
        chain = tuple(normalize(p) for p in row)
        residue = (start + offset) % r
        if residue in by_residue and by_residue[residue] != chain:
            raise ValueError(f"reference rows conflict at residue {residue}")
        by_residue[residue] = chain
    if sorted(by_residue) != list(range(r)):
        raise ValueError("reference file does not cover every row residue")
    g = CylGrowthDiagram(frame, r, tuple(by_residue[a] for a in range(r)))
    ok, problems = cgd_validate(g)
    if not ok:
        raise ValueError(f"reference diagram invalid: {problems[0]}")
    return g


def golden_figure_entries(name: str):
    """Iterate (i, j, partition) over every entry printed in the figure,
    in the figure's own coordinates."""
    data = load_golden(name)
    start = data["figure_start_row"]
    for offset, row in enumerate(data["figure_rows"]):
        i = start + offset
        for k, p in enumerate(row):
            yield i, i + k, normalize(p)
