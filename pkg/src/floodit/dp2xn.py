"""Exact flood-count dynamic program for 2xN boards.

State space: one entry per (border pair forming a section, attachment vertex
on each border, final colour d, ignore set I).  An entry holds the minimum
number of moves, all played on a section-spanning path, that flood the path
with colour d and absorb every off-path cell whose colour is not in I.

Seeds: entries whose section already contains a d-coloured r1-r2 path that
dominates the section, with all off-path colours inside I + {d}, start at 0.
Two monotone rules relax the rest:

  recolour rule   value(d, I)  <=  1 + min_d' value(d', I + {d})
  split rule      value        <=  value(left part) + value(right part)
                  over every border strictly between the section's borders
                  and every section edge crossing it

The board answer is the best full-board entry with an empty ignore set.

Two modes compute the same fixed point: "reference" runs simultaneous
relaxation sweeps to convergence (vectorised when the palette is small
enough, with a plain dict fallback), and "worklist" is a label-setting
best-first pass that finalises entries in value order.  Ignore sets are
canonicalised to the colours present in the section for table presentation;
the vectorised engine carries full bitmask planes internally, on which
equivalent masks provably hold equal values.
"""

from __future__ import annotations

import heapq
import time
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import pathsweep
from .board import Board2xN, Border, to_graph
from .engine import Move, replay
from .errors import (
    BudgetExceededError,
    CapacityError,
    FlooditError,
    InputError,
    ReconstructionError,
)

INF = 10**9
DP_COLOUR_CAP = 32
_DENSE_COLOUR_MAX = 8
_SCALAR_KEY_GUARD = 3_000_000


def _check_deadline(deadline):
    if deadline is not None and time.monotonic() > deadline:
        raise BudgetExceededError("time budget exhausted")


def _connected_section(t1, bb1, t2, bb2) -> bool:
    top = t1 < t2
    bottom = bb1 < bb2
    if not (top or bottom):
        return False
    if top and bottom:
        return max(t1, bb1) < min(t2, bb2)
    return True


def _left_candidates(t1, bb1, t2, bb2):
    out = set()
    if t1 < t2:
        out.add((0, t1))
    if bb1 < bb2:
        out.add((1, bb1))
    for j in range(min(t1, bb1), max(t1, bb1)):
        if t1 <= j < t2:
            out.add((0, j))
        if bb1 <= j < bb2:
            out.add((1, j))
    return sorted(out)


def _right_candidates(t1, bb1, t2, bb2):
    out = set()
    if t1 < t2:
        out.add((0, t2 - 1))
    if bb1 < bb2:
        out.add((1, bb2 - 1))
    for j in range(min(t2, bb2), max(t2, bb2)):
        if t1 <= j < t2:
            out.add((0, j))
        if bb1 <= j < bb2:
            out.add((1, j))
    return sorted(out)


def _crossing_cells(t1, bb1, t2, bb2, t, bb):
    """Edges of the parent section cut by the border (t, bb), as cell pairs
    with the first cell on the left side."""
    edges = []
    if t1 < t < t2:
        edges.append(((0, t - 1), (0, t)))
    if bb1 < bb < bb2:
        edges.append(((1, bb - 1), (1, bb)))
    for j in range(min(t, bb), max(t, bb)):
        if t1 <= j < t2 and bb1 <= j < bb2:
            if t <= j < bb:
                edges.append(((1, j), (0, j)))
            else:
                edges.append(((0, j), (1, j)))
    return edges


class _Section:
    __slots__ = ("sid", "t1", "bb1", "t2", "bb2", "pairs", "pair_slot")

    def __init__(self, sid, t1, bb1, t2, bb2):
        self.sid = sid
        self.t1 = t1
        self.bb1 = bb1
        self.t2 = t2
        self.bb2 = bb2
        self.pairs = []
        self.pair_slot = {}

    @property
    def geom(self):
        return (self.t1, self.bb1, self.t2, self.bb2)


class _SectionIndex:
    """Board-independent geometry for one board width: sections, attachment
    pairs admitting a path-dominated spanning tree, and split records."""

    def __init__(self, n: int, deadline=None):
        self.n = n
        self.sections = []
        self.by_geom = {}
        self.slots = []  # (sid, r1cell, r2cell)
        tick = 0
        for t1 in range(n + 1):
            for t2 in range(t1, n + 1):
                for bb1 in range(n + 1):
                    for bb2 in range(bb1, n + 1):
                        tick += 1
                        if tick % 4096 == 0:
                            _check_deadline(deadline)
                        if not _connected_section(t1, bb1, t2, bb2):
                            continue
                        sec = _Section(len(self.sections), t1, bb1, t2, bb2)
                        top = (t1, t2)
                        bottom = (bb1, bb2)
                        for r1 in _left_candidates(t1, bb1, t2, bb2):
                            for r2 in _right_candidates(t1, bb1, t2, bb2):
                                if (r1, r2) in sec.pair_slot:
                                    continue
                                if pathsweep.path_exists(top, bottom, r1, r2):
                                    sec.pair_slot[(r1, r2)] = len(self.slots)
                                    sec.pairs.append((r1, r2))
                                    self.slots.append((sec.sid, r1, r2))
                        self.sections.append(sec)
                        self.by_geom[sec.geom] = sec.sid
        self.slot_sid = np.array([s[0] for s in self.slots], dtype=np.int32)
        self._build_records(deadline)
        self._by_left = None
        self._by_right = None
        self._parent_ranges = None

    def _build_records(self, deadline):
        parent, left, right = [], [], []
        tick = 0
        for sec in self.sections:
            t1, bb1, t2, bb2 = sec.geom
            if not sec.pairs:
                continue
            for t in range(t1, t2 + 1):
                for bb in range(bb1, bb2 + 1):
                    if (t, bb) == (t1, bb1) or (t, bb) == (t2, bb2):
                        continue
                    lsid = self.by_geom.get((t1, bb1, t, bb))
                    rsid = self.by_geom.get((t, bb, t2, bb2))
                    if lsid is None or rsid is None:
                        continue
                    lsec = self.sections[lsid]
                    rsec = self.sections[rsid]
                    edges = _crossing_cells(t1, bb1, t2, bb2, t, bb)
                    if not edges:
                        continue
                    tick += 1
                    if tick % 512 == 0:
                        _check_deadline(deadline)
                    for x1, x2 in edges:
                        for (r1, r2), pslot in sec.pair_slot.items():
                            lslot = lsec.pair_slot.get((r1, x1))
                            if lslot is None:
                                continue
                            rslot = rsec.pair_slot.get((x2, r2))
                            if rslot is None:
                                continue
                            parent.append(pslot)
                            left.append(lslot)
                            right.append(rslot)
        order = sorted(range(len(parent)), key=parent.__getitem__)
        self.rec_parent = np.array([parent[i] for i in order], dtype=np.int64)
        self.rec_left = np.array([left[i] for i in order], dtype=np.int64)
        self.rec_right = np.array([right[i] for i in order], dtype=np.int64)
        # One contiguous group per parent slot that has any split.
        starts = []
        parents = []
        prev = -1
        for i, p in enumerate(self.rec_parent):
            if p != prev:
                starts.append(i)
                parents.append(int(p))
                prev = p
        self.group_starts = np.array(starts, dtype=np.int64)
        self.group_parents = np.array(parents, dtype=np.int64)

    def records_by_side(self):
        if self._by_left is None:
            by_left: dict = {}
            by_right: dict = {}
            for i in range(len(self.rec_parent)):
                by_left.setdefault(int(self.rec_left[i]), []).append(i)
                by_right.setdefault(int(self.rec_right[i]), []).append(i)
            self._by_left = by_left
            self._by_right = by_right
        return self._by_left, self._by_right

    def parent_ranges(self):
        if self._parent_ranges is None:
            ranges = {}
            total = len(self.rec_parent)
            for gi, p in enumerate(self.group_parents):
                lo = int(self.group_starts[gi])
                hi = int(self.group_starts[gi + 1]) if gi + 1 < len(self.group_starts) else total
                ranges[int(p)] = (lo, hi)
            self._parent_ranges = ranges
        return self._parent_ranges


_INDEX_CACHE: dict = {}


def _get_index(n: int, deadline=None) -> _SectionIndex:
    idx = _INDEX_CACHE.get(n)
    if idx is None:
        idx = _SectionIndex(n, deadline)
        _INDEX_CACHE[n] = idx
    return idx


@dataclass(frozen=True)
class ZKey:
    b1: Border
    b2: Border
    r1: int
    r2: int
    d: int
    ignore: int  # colour bitmask, canonicalised to colours in the section


@dataclass
class TableStats:
    keys: int
    zeros: int
    max_value: int
    sweeps: int
    relaxations: int


@dataclass(frozen=True)
class BackPtr:
    """Which relaxation rule produced an entry's value.

    kind "zero": seeded directly.  kind "recolour": the value is one more
    than the entry for colour `d_from` with the entry's own colour added to
    the ignore set.  kind "split": the value is the sum of the entries left
    and right of border `border`, joined through the crossing edge
    (x1, x2).
    """

    kind: str  # "zero" | "recolour" | "split"
    d_from: Optional[int] = None
    border: Optional[Border] = None
    x1: Optional[int] = None
    x2: Optional[int] = None


def tree_exists(board: Board2xN, b1: Border, b2: Border, r1: int, r2: int) -> bool:
    """Can the section between b1 and b2 be spanned by a tree whose non-leaf
    vertices all lie on the r1-r2 path?

    Equivalent test: a simple r1-r2 path exists with every other section
    vertex adjacent to it (off-path vertices then hang off the path as
    leaves).
    """
    sec = _require_section(board, b1, b2)
    c1 = _vertex_cell(board, r1, sec)
    c2 = _vertex_cell(board, r2, sec)
    return pathsweep.path_exists((b1.t, b2.t), (b1.b, b2.b), c1, c2)


def zero_test(board: Board2xN, z: ZKey) -> bool:
    """Does the section hold a d-coloured r1-r2 path that dominates it, with
    every off-path cell coloured from I + {d}?"""
    sec = _require_section(board, z.b1, z.b2)
    c1 = _vertex_cell(board, z.r1, sec)
    c2 = _vertex_cell(board, z.r2, sec)
    d = z.d
    if not 0 <= d < len(board.palette):
        raise InputError(f"colour {d} outside the palette")
    allowed = z.ignore | (1 << d)

    def on_ok(row, col):
        return board.cells[row][col] == d

    def off_ok(row, col):
        return (allowed >> board.cells[row][col]) & 1 == 1

    return pathsweep.path_exists((z.b1.t, z.b2.t), (z.b1.b, z.b2.b), c1, c2, on_ok, off_ok)


def _require_section(board, b1, b2):
    for b in (b1, b2):
        if not (0 <= b.t <= board.n and 0 <= b.b <= board.n):
            raise InputError(f"border {b} out of range")
    if not (b1.t <= b2.t and b1.b <= b2.b):
        raise InputError(f"borders not ordered: {b1} vs {b2}")
    geom = (b1.t, b1.b, b2.t, b2.b)
    if not _connected_section(*geom):
        raise InputError(f"borders {b1}, {b2} do not bound a section")
    return geom


def _vertex_cell(board, vertex, geom):
    row, col = divmod(vertex, board.n)
    t1, bb1, t2, bb2 = geom
    inside = (row == 0 and t1 <= col < t2) or (row == 1 and bb1 <= col < bb2)
    if not inside:
        raise InputError(f"vertex {vertex} not inside the section")
    return (row, col)


def _section_masks(board, index):
    """Bitmask of colours present in each section (per board)."""
    n = board.n
    # rowmask[r][a][b] = colours of row r in columns [a, b)
    rowmask = []
    for r in range(2):
        table = [[0] * (n + 1) for _ in range(n + 1)]
        for a in range(n + 1):
            acc = 0
            for b in range(a + 1, n + 1):
                acc |= 1 << board.cells[r][b - 1]
                table[a][b] = acc
        rowmask.append(table)
    masks = np.zeros(len(index.sections), dtype=np.int64)
    for sec in index.sections:
        masks[sec.sid] = rowmask[0][sec.t1][sec.t2] | rowmask[1][sec.bb1][sec.bb2]
    return masks


def _zero_slots(board, index):
    """(slot, seed colour, section mask) for every slot whose section holds a
    dominating monochromatic r1-r2 path."""
    out = []
    cells = board.cells
    for k, (sid, r1, r2) in enumerate(index.slots):
        d0 = cells[r1[0]][r1[1]]
        if cells[r2[0]][r2[1]] != d0:
            continue
        sec = index.sections[sid]

        def on_ok(row, col, _d=d0):
            return cells[row][col] == _d

        if pathsweep.path_exists((sec.t1, sec.t2), (sec.bb1, sec.bb2), r1, r2, on_ok):
            out.append((k, d0))
    return out


class DPTable:
    """Solved table: values over the key space plus solve metadata."""

    def __init__(self, board, index, mode, masks, target, dense=None, scalar=None,
                 sweeps=0, relaxations=0):
        self.board = board
        self.mode = mode
        self.target = target
        self._index = index
        self._masks = masks
        self._dense = dense
        self._scalar = scalar
        self._sweeps = sweeps
        self._relaxations = relaxations
        self._entries = None
        self.value = None
        self.goal = None  # (slot, d) achieving the value

    # -- lookups ---------------------------------------------------------

    def _slot_value(self, slot, d, mask):
        if self._dense is not None:
            return int(self._dense[slot, d, mask])
        v = self._scalar.get((slot, d, mask))
        return INF if v is None else v

    def value_of(self, z: ZKey):
        """Value for a key; +inf for never-relaxed keys."""
        slot, sid = self._slot_of_key(z)
        if not 0 <= z.d < len(self.board.palette):
            raise InputError(f"colour {z.d} outside the palette")
        mask = z.ignore & int(self._masks[sid])
        v = self._slot_value(slot, z.d, mask)
        return float("inf") if v >= INF else v

    def _zkey(self, slot, d, mask):
        sid, r1, r2 = self._index.slots[slot]
        sec = self._index.sections[sid]
        n = self.board.n
        return ZKey(
            Border(sec.t1, sec.bb1),
            Border(sec.t2, sec.bb2),
            r1[0] * n + r1[1],
            r2[0] * n + r2[1],
            d,
            mask,
        )

    def entries(self) -> dict:
        """All finite keys with canonical ignore masks."""
        if self._entries is not None:
            return self._entries
        out = {}
        c = len(self.board.palette)
        for slot, (sid, _r1, _r2) in enumerate(self._index.slots):
            m = int(self._masks[sid])
            for d in range(c):
                sub = m
                while True:
                    v = self._slot_value(slot, d, sub)
                    if v < INF:
                        out[self._zkey(slot, d, sub)] = v
                    if sub == 0:
                        break
                    sub = (sub - 1) & m
        self._entries = out
        return out

    def _rule_of(self, slot, d, mask):
        """Find a relaxation rule achieving the stored value.

        Returns ("zero",), ("recolour", d_from) or ("split", record_index).
        """
        v = self._slot_value(slot, d, mask)
        if v >= INF:
            raise InputError("entry has no finite value")
        if v == 0:
            return ("zero",)
        index = self._index
        c = len(self.board.palette)
        m = int(self._masks[index.slot_sid[slot]])
        child_mask = (mask | (1 << d)) & m
        for dp in range(c):
            if self._slot_value(slot, dp, child_mask) == v - 1:
                return ("recolour", dp)
        lo_hi = index.parent_ranges().get(slot)
        if lo_hi:
            for i in range(lo_hi[0], lo_hi[1]):
                ls = int(index.rec_left[i])
                rs = int(index.rec_right[i])
                lm = int(self._masks[index.slot_sid[ls]])
                rm = int(self._masks[index.slot_sid[rs]])
                lv = self._slot_value(ls, d, mask & lm)
                if lv > v:
                    continue
                if lv + self._slot_value(rs, d, mask & rm) == v:
                    return ("split", i)
        raise FlooditError("no relaxation rule reproduces the stored value")

    def _slot_of_key(self, z: ZKey):
        geom = _require_section(self.board, z.b1, z.b2)
        sid = self._index.by_geom.get(geom)
        if sid is None:
            raise InputError(f"no section for borders {z.b1}, {z.b2}")
        c1 = _vertex_cell(self.board, z.r1, geom)
        c2 = _vertex_cell(self.board, z.r2, geom)
        slot = self._index.sections[sid].pair_slot.get((c1, c2))
        if slot is None:
            raise InputError(f"({z.r1}, {z.r2}) is not a valid attachment pair")
        return slot, sid

    def back_pointer(self, z: ZKey) -> "BackPtr":
        """Which rule produced the key's value (re-derived on demand)."""
        slot, sid = self._slot_of_key(z)
        mask = z.ignore & int(self._masks[sid])
        rule = self._rule_of(slot, z.d, mask)
        if rule[0] == "zero":
            return BackPtr("zero")
        if rule[0] == "recolour":
            return BackPtr("recolour", d_from=rule[1])
        index = self._index
        i = rule[1]
        ls = int(index.rec_left[i])
        rs = int(index.rec_right[i])
        lsec = index.sections[index.slots[ls][0]]
        x1 = index.slots[ls][2]
        x2 = index.slots[rs][1]
        n = self.board.n
        return BackPtr(
            "split",
            border=Border(lsec.t2, lsec.bb2),
            x1=x1[0] * n + x1[1],
            x2=x2[0] * n + x2[1],
        )

    def board_value(self, target: Optional[int] = None):
        """Best full-board value, over all final colours or a fixed one.

        Returns (value, (slot, d)); the slot/colour pair feeds reconstruction.
        """
        c = len(self.board.palette)
        if target is not None and not 0 <= target < c:
            raise InputError(f"target colour {target} outside the palette")
        best = INF
        goal = None
        for slot in _goal_slots(self.board, self._index):
            for d in range(c) if target is None else (target,):
                v = self._slot_value(slot, d, 0)
                if v < best:
                    best = v
                    goal = (slot, d)
        return best, goal

    def theta(self, z: ZKey) -> int:
        """Value plus the number of borders strictly between the key's
        borders (the measure that bounds relaxation depth)."""
        v = self.value_of(z)
        between = (z.b2.t - z.b1.t + 1) * (z.b2.b - z.b1.b + 1) - 2
        return int(v) + between

    def stats(self) -> TableStats:
        ent = self.entries()
        values = ent.values()
        return TableStats(
            keys=len(ent),
            zeros=sum(1 for v in values if v == 0),
            max_value=max(values) if ent else 0,
            sweeps=self._sweeps,
            relaxations=self._relaxations,
        )


def table_stats(table: DPTable) -> TableStats:
    return table.stats()


# -- solvers ---------------------------------------------------------------


def _goal_slots(board, index):
    sid = index.by_geom[(0, 0, board.n, board.n)]
    return [slot for (_pair, slot) in index.sections[sid].pair_slot.items()]


def _solve_dense(board, index, masks, deadline):
    n = board.n
    c = len(board.palette)
    planes = 1 << c
    nslots = len(index.slots)
    if nslots * c * planes > 400_000_000:
        raise BudgetExceededError("dense table would not fit in memory")
    all_masks = np.arange(planes, dtype=np.int64)
    t_init = np.full((nslots, c, planes), INF, dtype=np.int32)
    for slot, d0 in _zero_slots(board, index):
        sid = index.slot_sid[slot]
        base = int(masks[sid]) & ~(1 << d0)
        t_init[slot, d0, (all_masks & base) == base] = 0
    imap = all_masks[None, :] | (1 << np.arange(c, dtype=np.int64))[:, None]

    group_starts = index.group_starts
    group_parents = index.group_parents
    total_records = len(index.rec_parent)
    # Chunk split-rule evaluation on group boundaries to bound memory.
    max_chunk_records = max(1, 4_000_000 // planes)
    chunk_bounds = [0]
    for gi in range(len(group_starts)):
        start = int(group_starts[gi])
        if start - int(group_starts[chunk_bounds[-1]]) >= max_chunk_records:
            chunk_bounds.append(gi)
    chunk_bounds.append(len(group_starts))

    t_cur = t_init.copy()
    sweeps = 0
    relaxations = 0
    cap = n * n + 2 * n + 2
    while True:
        _check_deadline(deadline)
        t_min = t_cur.min(axis=1)
        f1 = t_min[:, imap] + 1
        f2 = np.full_like(t_cur, INF)
        for ci in range(len(chunk_bounds) - 1):
            glo, ghi = chunk_bounds[ci], chunk_bounds[ci + 1]
            if glo == ghi:
                continue
            rlo = int(group_starts[glo])
            rhi = int(group_starts[ghi]) if ghi < len(group_starts) else total_records
            sums = t_cur[index.rec_left[rlo:rhi]] + t_cur[index.rec_right[rlo:rhi]]
            np.minimum(sums, INF, out=sums)
            offsets = group_starts[glo:ghi] - rlo
            f2[group_parents[glo:ghi]] = np.minimum.reduceat(sums, offsets, axis=0)
        t_new = np.minimum(np.minimum(f1, f2), t_init)
        changed = int(np.count_nonzero(t_new != t_cur))
        relaxations += changed
        sweeps += 1
        t_cur = t_new
        if changed == 0:
            break
        if sweeps > cap:
            raise FlooditError("relaxation failed to converge within its bound")
    return t_cur, sweeps, relaxations


def _scalar_keys(index, masks, c):
    total = 0
    for sid, _r1, _r2 in index.slots:
        total += c * (1 << bin(int(masks[sid])).count("1"))
        if total > _SCALAR_KEY_GUARD:
            raise BudgetExceededError(
                "key space too large for the scalar engine; reduce the palette"
            )
    return total


def _solve_scalar_sweeps(board, index, masks, deadline):
    """Dict-based simultaneous relaxation, for palettes too big to vectorise."""
    c = len(board.palette)
    _scalar_keys(index, masks, c)
    zero_vals = {}
    for slot, d0 in _zero_slots(board, index):
        m = int(masks[index.slot_sid[slot]])
        base = m & ~(1 << d0)
        for extra in ({0, 1 << d0} if (1 << d0) & m else {0}):
            zero_vals[(slot, d0, base | (extra & m))] = 0

    keys = []
    for slot, (sid, _r1, _r2) in enumerate(index.slots):
        m = int(masks[sid])
        sub = m
        while True:
            for d in range(c):
                keys.append((slot, d, sub))
            if sub == 0:
                break
            sub = (sub - 1) & m
    ranges = index.parent_ranges()
    n = board.n
    cap = n * n + 2 * n + 2
    cur = dict(zero_vals)
    sweeps = 0
    relaxations = 0
    while True:
        _check_deadline(deadline)
        nxt = {}
        changed = 0
        for key in keys:
            slot, d, sub = key
            sid = int(index.slot_sid[slot])
            m = int(masks[sid])
            best = zero_vals.get(key, INF)
            child_mask = (sub | (1 << d)) & m
            for dp in range(c):
                v = cur.get((slot, dp, child_mask), INF)
                if v + 1 < best:
                    best = v + 1
            lo_hi = ranges.get(slot)
            if lo_hi:
                for i in range(lo_hi[0], lo_hi[1]):
                    ls = int(index.rec_left[i])
                    rs = int(index.rec_right[i])
                    lm = int(masks[index.slot_sid[ls]])
                    rm = int(masks[index.slot_sid[rs]])
                    lv = cur.get((ls, d, sub & lm), INF)
                    if lv >= best:
                        continue
                    rv = cur.get((rs, d, sub & rm), INF)
                    if lv + rv < best:
                        best = lv + rv
            if best < INF:
                nxt[key] = best
                if cur.get(key, INF) != best:
                    changed += 1
        relaxations += changed
        sweeps += 1
        cur = nxt
        if changed == 0:
            break
        if sweeps > cap:
            raise FlooditError("relaxation failed to converge within its bound")
    return cur, sweeps, relaxations


def _solve_worklist(board, index, masks, deadline):
    """Label-setting pass: pop entries in value order, finalise, and offer
    all rule consequences whose other inputs are already final."""
    c = len(board.palette)
    by_left, by_right = index.records_by_side()
    slot_sid = index.slot_sid
    rec_left, rec_right = index.rec_left, index.rec_right
    rec_parent = index.rec_parent

    final = {}
    best = {}
    heap = []
    relaxations = 0  # entries settled at a nonzero value

    def offer(value, key):
        if key in final:
            return
        cur = best.get(key)
        if cur is None or value < cur:
            best[key] = value
            heapq.heappush(heap, (value, key))

    for slot, d0 in _zero_slots(board, index):
        m = int(masks[slot_sid[slot]])
        base = m & ~(1 << d0)
        offer(0, (slot, d0, base))
        full = (base | (1 << d0)) & m
        if full != base:
            offer(0, (slot, d0, full))

    ticker = 0
    while heap:
        ticker += 1
        if ticker % 2048 == 0:
            _check_deadline(deadline)
        v, key = heapq.heappop(heap)
        if key in final:
            continue
        final[key] = v
        if v > 0:
            relaxations += 1
        slot, d, sub = key
        m = int(masks[slot_sid[slot]])
        # recolour-rule parents: (slot, dp, Ip) with (Ip | bit(dp)) n M == sub
        for dp in range(c):
            bit = 1 << dp
            if bit & m:
                if bit & sub:
                    offer(v + 1, (slot, dp, sub))
                    offer(v + 1, (slot, dp, sub & ~bit))
            else:
                offer(v + 1, (slot, dp, sub))
        # split-rule parents, with this key as the left or the right part
        for side, recs in (("L", by_left.get(slot)), ("R", by_right.get(slot))):
            if not recs:
                continue
            for i in recs:
                pslot = int(rec_parent[i])
                pm = int(masks[slot_sid[pslot]])
                other = int(rec_right[i]) if side == "L" else int(rec_left[i])
                om = int(masks[slot_sid[other]])
                diff = pm & ~m
                extra = diff
                while True:
                    pmask = sub | extra
                    partner = final.get((other, d, pmask & om))
                    if partner is not None:
                        offer(v + partner, (pslot, d, pmask))
                    if extra == 0:
                        break
                    extra = (extra - 1) & diff
    return final, relaxations


def solve(board: Board2xN, target: Optional[int] = None, mode: str = "reference",
          time_budget: Optional[float] = None):
    """Minimum move count to flood the board (optionally with a fixed final
    colour).  Returns (value, DPTable)."""
    c = len(board.palette)
    if c > DP_COLOUR_CAP:
        raise CapacityError(f"palette size {c} exceeds the cap of {DP_COLOUR_CAP}")
    if target is not None and not 0 <= target < c:
        raise InputError(f"target colour {target} outside the palette")
    if mode not in ("reference", "worklist"):
        raise InputError(f"unknown mode {mode!r}")
    deadline = None if time_budget is None else time.monotonic() + time_budget
    index = _get_index(board.n, deadline)
    masks = _section_masks(board, index)

    if mode == "reference":
        if c <= _DENSE_COLOUR_MAX:
            dense, sweeps, relax = _solve_dense(board, index, masks, deadline)
            table = DPTable(board, index, mode, masks, target, dense=dense,
                            sweeps=sweeps, relaxations=relax)
        else:
            scalar, sweeps, relax = _solve_scalar_sweeps(board, index, masks, deadline)
            table = DPTable(board, index, mode, masks, target, scalar=scalar,
                            sweeps=sweeps, relaxations=relax)
    else:
        scalar, relax = _solve_worklist(board, index, masks, deadline)
        table = DPTable(board, index, mode, masks, target, scalar=scalar,
                        sweeps=0, relaxations=relax)

    best, goal = table.board_value(target)
    if best >= INF:
        raise FlooditError("no finite value for the whole board")
    table.value = best
    table.goal = goal
    return best, table


# -- sequence reconstruction -------------------------------------------------


def reconstruct(table: DPTable, board: Optional[Board2xN] = None) -> list:
    """Extract a move sequence of length table.value that floods the board.

    Walks the solved table: a zero entry emits nothing, a recolour step
    emits its child's moves plus one move at the left attachment vertex, a
    split emits left then right.  The result is replay-validated; failure
    raises instead of returning a bad sequence.
    """
    if table.value is None or table.goal is None:
        raise InputError("table has no solved goal; run solve() first")
    board = board or table.board
    index = table._index
    masks = table._masks
    n = board.n

    def derive(slot, d, mask):
        rule = table._rule_of(slot, d, mask)
        if rule[0] == "zero":
            return []
        sid = int(index.slot_sid[slot])
        m = int(masks[sid])
        if rule[0] == "recolour":
            moves = derive(slot, rule[1], (mask | (1 << d)) & m)
            r1 = index.slots[slot][1]
            moves.append(Move(r1[0] * n + r1[1], d))
            return moves
        i = rule[1]
        ls = int(index.rec_left[i])
        rs = int(index.rec_right[i])
        lm = int(masks[index.slot_sid[ls]])
        rm = int(masks[index.slot_sid[rs]])
        return derive(ls, d, mask & lm) + derive(rs, d, mask & rm)

    slot, d = table.goal
    moves = derive(slot, d, 0)
    graph = to_graph(board)
    final, flooded = replay(graph, moves)
    ok = flooded and len(moves) == table.value
    if ok and table.target is not None:
        ok = final.colouring[0] == table.target
    if not ok:
        raise ReconstructionError(
            "reconstructed sequence failed replay validation",
            sequence=moves,
            final_colouring=final.colouring,
        )
    return moves
