"""2xN board geometry: the cell-adjacency graph, borders, sections and the
board text file format.

A border is a top-to-bottom path along cell edges, determined by the column
position where it meets the top edge (t) and the bottom edge (b), both in
0..n.  Vertex ids are row-major with row 0 on top: id = row * n + col.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Optional, Sequence

from .engine import ColouredGraph
from .errors import InputError, ParseError


class Border(NamedTuple):
    t: int
    b: int


@dataclass(frozen=True)
class Board2xN:
    n: int
    cells: tuple  # (top row, bottom row), each a tuple of colour ids
    palette: tuple

    def __post_init__(self):
        if self.n < 1:
            raise InputError("board must have at least one column")
        if len(self.cells) != 2 or any(len(row) != self.n for row in self.cells):
            raise InputError("board must have exactly 2 rows of n cells")
        for row in self.cells:
            for cid in row:
                if not 0 <= cid < len(self.palette):
                    raise InputError(f"cell colour id {cid} outside the palette")

    def colour_at(self, row: int, col: int) -> int:
        return self.cells[row][col]

    def vertex(self, row: int, col: int) -> int:
        return row * self.n + col

    def cell_of(self, vertex: int):
        return divmod(vertex, self.n)


def board_from_tokens(top: Sequence[str], bottom: Sequence[str]) -> Board2xN:
    """Build a board from colour tokens; ids assigned by first occurrence
    scanning the top row then the bottom row."""
    if len(top) != len(bottom) or not top:
        raise InputError("rows must be non-empty and of equal length")
    ids = {}
    rows = []
    for row in (top, bottom):
        out = []
        for tok in row:
            if tok not in ids:
                ids[tok] = len(ids)
            out.append(ids[tok])
        rows.append(tuple(out))
    palette = tuple(sorted(ids, key=ids.get))
    return Board2xN(len(top), (rows[0], rows[1]), palette)


def parse_board(text: str) -> Board2xN:
    """Parse the board text format.

    Format: a line holding n, then two lines of n whitespace-separated
    colour tokens (top row first).  '#' comment lines may precede the n line.
    """
    lines = text.splitlines()
    i = 0
    while i < len(lines) and lines[i].lstrip().startswith("#"):
        i += 1
    if i >= len(lines):
        raise ParseError("missing column-count line", line=i + 1)
    head = lines[i].strip()
    try:
        n = int(head)
    except ValueError:
        raise ParseError(f"expected a column count, got {head!r}", line=i + 1)
    if n < 1:
        raise ParseError(f"column count must be >= 1, got {n}", line=i + 1)
    rows = []
    for r in range(2):
        j = i + 1 + r
        if j >= len(lines):
            raise ParseError("missing board row", line=j + 1)
        toks = lines[j].split()
        if len(toks) != n:
            raise ParseError(f"expected {n} tokens, got {len(toks)}", line=j + 1)
        rows.append(toks)
    for j in range(i + 3, len(lines)):
        if lines[j].strip():
            raise ParseError("unexpected trailing content", line=j + 1)
    return board_from_tokens(rows[0], rows[1])


def serialize_board(board: Board2xN) -> str:
    top = " ".join(board.palette[c] for c in board.cells[0])
    bottom = " ".join(board.palette[c] for c in board.cells[1])
    return f"{board.n}\n{top}\n{bottom}\n"


def to_graph(board: Board2xN) -> ColouredGraph:
    """Cell-adjacency graph: one vertex per square, edges between squares
    sharing a side.  2n vertices, 3n - 2 edges."""
    n = board.n
    adj = [[] for _ in range(2 * n)]
    for row in range(2):
        for col in range(n):
            v = row * n + col
            if col + 1 < n:
                adj[v].append(v + 1)
                adj[v + 1].append(v)
            if row == 0:
                adj[v].append(v + n)
                adj[v + n].append(v)
    colouring = list(board.cells[0]) + list(board.cells[1])
    return ColouredGraph(adj, colouring, board.palette)


def enumerate_borders(n: int) -> list:
    """All (n+1)^2 borders of a 2xN board, including the board edges
    (0,0) and (n,n)."""
    if n < 1:
        raise InputError("n must be >= 1")
    return [Border(t, b) for t in range(n + 1) for b in range(n + 1)]


def border_leq(b1: Border, b2: Border) -> bool:
    """Componentwise order: b1 meets both board edges no further right
    than b2."""
    return b1.t <= b2.t and b1.b <= b2.b


def _check_border(board: Board2xN, border: Border):
    if not (0 <= border.t <= board.n and 0 <= border.b <= board.n):
        raise InputError(f"border {border} out of range for n={board.n}")


def section_vertices(board: Board2xN, b1: Border, b2: Border) -> set:
    """Vertices strictly between two comparable borders: top-row columns
    b1.t..b2.t-1 and bottom-row columns b1.b..b2.b-1."""
    _check_border(board, b1)
    _check_border(board, b2)
    if not border_leq(b1, b2):
        raise InputError(f"borders not ordered: {b1} vs {b2}")
    n = board.n
    out = {0 * n + c for c in range(b1.t, b2.t)}
    out |= {1 * n + c for c in range(b1.b, b2.b)}
    return out


def is_section(board: Board2xN, b1: Border, b2: Border) -> bool:
    """True iff the vertex set between the borders is non-empty and
    connected."""
    if not border_leq(b1, b2):
        raise InputError(f"borders not ordered: {b1} vs {b2}")
    top_empty = b1.t == b2.t
    bottom_empty = b1.b == b2.b
    if top_empty and bottom_empty:
        return False
    if top_empty or bottom_empty:
        return True
    # Both rows present: connected iff the column intervals share a column.
    return max(b1.t, b1.b) < min(b2.t, b2.b)


def incident_vertices(
    board: Board2xN,
    border: Border,
    side: str,
    within: Optional[tuple] = None,
) -> list:
    """Squares with an edge on the border.

    Vertical segments at positions t (top row) and b (bottom row) contribute
    the square on the requested side; squares whose middle edge lies in the
    horizontal run [min(t,b), max(t,b)) are incident regardless of side.
    `within` restricts the result to a section given as a (b1, b2) pair.
    """
    _check_border(board, border)
    if side not in ("left", "right"):
        raise InputError(f"side must be 'left' or 'right', got {side!r}")
    n = board.n
    t, b = border
    cells = set()
    if side == "right":
        if t < n:
            cells.add((0, t))
        if b < n:
            cells.add((1, b))
    else:
        if t > 0:
            cells.add((0, t - 1))
        if b > 0:
            cells.add((1, b - 1))
    for j in range(min(t, b), max(t, b)):
        cells.add((0, j))
        cells.add((1, j))
    ids = {row * n + col for row, col in cells}
    if within is not None:
        ids &= section_vertices(board, within[0], within[1])
    return sorted(ids)


def crossing_edges(
    board: Board2xN,
    border: Border,
    within: Optional[tuple] = None,
) -> list:
    """Edges of the cell graph cut by the border, as (x1, x2) with x1 on the
    left (<=) side.  Cuts: the top horizontal edge at position t, the bottom
    one at position b, and one vertical edge per run column."""
    _check_border(board, border)
    n = board.n
    t, b = border
    edges = []
    if 0 < t < n:
        edges.append((t - 1, t))  # top row, ids equal cols
    if 0 < b < n:
        edges.append((n + b - 1, n + b))
    for j in range(min(t, b), max(t, b)):
        top, bottom = j, n + j
        if t <= j < b:
            edges.append((bottom, top))  # bottom square is left of the border
        else:
            edges.append((top, bottom))
    if within is not None:
        sect = section_vertices(board, within[0], within[1])
        edges = [(x1, x2) for x1, x2 in edges if x1 in sect and x2 in sect]
    return edges
