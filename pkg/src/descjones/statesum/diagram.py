"""Sliced long-knot diagrams.

A diagram is read bottom to top as a list of slices, each holding one
event.  The state between slices is a row of oriented strands ("u" for
upward, "d" for downward); the long knot enters as one upward strand at
the bottom and leaves as one upward strand at the top.

Crossing kinds are "X1+" .. "X4+" (positive) and "X1-" .. "X4-"
(negative).  A crossing at position p acts on strands p and p+1; its
bottom and top orientations are fixed by the kind.  A cup at p inserts
the pair (u, d) before strand p; a cap at p closes strands p, p+1, which
must be oriented (d, u).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, replace
from importlib import resources
from pathlib import Path
from typing import Iterable, Sequence

CROSSING_KINDS = ("X1+", "X2+", "X3+", "X4+", "X1-", "X2-", "X3-", "X4-")
EVENTS = CROSSING_KINDS + ("cup", "cap", "id")

# bottom orientation -> top orientation for each crossing family
CROSSING_ORIENTATION = {
    "X1": (("u", "u"), ("u", "u")),
    "X2": (("d", "u"), ("u", "d")),
    "X3": (("d", "d"), ("d", "d")),
    "X4": (("u", "d"), ("d", "u")),
}

_ORIENT_WORDS = {"u": "u", "up": "u", "d": "d", "down": "d"}


class DiagramError(ValueError):
    """The slices do not describe a valid zero-writhe long knot."""


def crossing_sign(kind: str) -> int:
    return 1 if kind.endswith("+") else -1


@dataclass(frozen=True)
class Slice:
    event: str
    pos: int = 0
    orient: tuple[str, ...] | None = None

    def to_json(self) -> dict:
        out: dict = {"event": self.event, "pos": self.pos}
        if self.orient is not None:
            out["orient"] = list(self.orient)
        return out

    @classmethod
    def from_json(cls, data: dict) -> "Slice":
        if not isinstance(data, dict) or "event" not in data:
            raise DiagramError(f"slice must be an object with an 'event': {data!r}")
        orient = data.get("orient")
        if orient is not None:
            try:
                orient = tuple(_ORIENT_WORDS[str(o).lower()] for o in orient)
            except KeyError as exc:
                raise DiagramError(f"unknown orientation label {exc.args[0]!r}") from None
        pos = data.get("pos", 0)
        if not isinstance(pos, int) or isinstance(pos, bool):
            raise DiagramError(f"slice position must be an integer, got {pos!r}")
        return cls(str(data["event"]), pos, orient)


@dataclass(frozen=True)
class LongKnotDiagram:
    slices: tuple[Slice, ...]
    strands_max: int | None = None
    name: str = ""

    @classmethod
    def from_events(cls, events: Iterable[tuple[str, int]], name: str = "") -> "LongKnotDiagram":
        return cls(tuple(Slice(e, p) for e, p in events), None, name)

    @property
    def events(self) -> list[tuple[str, int]]:
        return [(s.event, s.pos) for s in self.slices]

    @property
    def writhe(self) -> int:
        return sum(crossing_sign(s.event) for s in self.slices if s.event in CROSSING_KINDS)

    @property
    def crossing_count(self) -> int:
        return sum(1 for s in self.slices if s.event in CROSSING_KINDS)

    def to_json(self) -> dict:
        out: dict = {"strands_max": self.strands_max, "slices": [s.to_json() for s in self.slices]}
        if self.name:
            out["name"] = self.name
        return out

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=1)

    @classmethod
    def from_json(cls, data: dict) -> "LongKnotDiagram":
        if not isinstance(data, dict) or not isinstance(data.get("slices"), list):
            raise DiagramError("diagram must be an object with a 'slices' list")
        smax = data.get("strands_max")
        if smax is not None and (not isinstance(smax, int) or smax < 1):
            raise DiagramError(f"strands_max must be a positive integer, got {smax!r}")
        return cls(tuple(Slice.from_json(s) for s in data["slices"]), smax, str(data.get("name", "")))


def load_diagram(path: str | Path) -> LongKnotDiagram:
    try:
        data = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise DiagramError(f"{path}: not valid JSON ({exc.msg} at line {exc.lineno})") from None
    return LongKnotDiagram.from_json(data)


class _Components:
    def __init__(self):
        self.parent: list[int] = []

    def new(self) -> int:
        self.parent.append(len(self.parent))
        return len(self.parent) - 1

    def find(self, a: int) -> int:
        while self.parent[a] != a:
            self.parent[a] = self.parent[self.parent[a]]
            a = self.parent[a]
        return a

    def union(self, a: int, b: int) -> None:
        self.parent[self.find(a)] = self.find(b)

    def count(self) -> int:
        return len({self.find(a) for a in range(len(self.parent))})


def validate_diagram(d: LongKnotDiagram) -> LongKnotDiagram:
    """Check every invariant and return the diagram with orientations and strands_max filled in."""
    orient: list[str] = ["u"]
    arcs = _Components()
    ids = [arcs.new()]
    widest = 1
    normalized = []
    for index, s in enumerate(d.slices):
        where = f"slice {index} ({s.event}@{s.pos})"
        p = s.pos
        if s.event not in EVENTS:
            raise DiagramError(f"{where}: unknown event; expected one of {', '.join(EVENTS)}")
        if s.event in CROSSING_KINDS:
            if not 0 <= p < len(orient) - 1:
                raise DiagramError(f"{where}: crossing needs strands {p} and {p + 1}")
            bottom, top = CROSSING_ORIENTATION[s.event[:2]]
            if tuple(orient[p:p + 2]) != bottom:
                raise DiagramError(
                    f"{where}: orientation mismatch, strands are {''.join(orient[p:p + 2])}, "
                    f"{s.event} expects {''.join(bottom)}")
            orient[p:p + 2] = top
            nw, ne = arcs.new(), arcs.new()
            # strands run diagonally: south-west to north-east and south-east to north-west
            arcs.union(ids[p], ne)
            arcs.union(ids[p + 1], nw)
            ids[p:p + 2] = [nw, ne]
        elif s.event == "cup":
            if not 0 <= p <= len(orient):
                raise DiagramError(f"{where}: cup position out of range")
            orient[p:p] = ["u", "d"]
            a, b = arcs.new(), arcs.new()
            arcs.union(a, b)
            ids[p:p] = [a, b]
        elif s.event == "cap":
            if not 0 <= p < len(orient) - 1:
                raise DiagramError(f"{where}: cap needs strands {p} and {p + 1}")
            if tuple(orient[p:p + 2]) != ("d", "u"):
                raise DiagramError(f"{where}: orientation mismatch, a cap closes (d, u) only")
            arcs.union(ids[p], ids[p + 1])
            del orient[p:p + 2]
            del ids[p:p + 2]
        if s.orient is not None and tuple(s.orient) != tuple(orient):
            raise DiagramError(
                f"{where}: declared orientation {''.join(s.orient)} but strands are {''.join(orient)}")
        widest = max(widest, len(orient))
        normalized.append(replace(s, orient=tuple(orient)))
    if orient != ["u"]:
        raise DiagramError(f"open strands at the top must be one upward strand, found {''.join(orient) or 'none'}")
    if arcs.count() != 1:
        raise DiagramError("diagram has closed components; only knots are supported")
    if d.writhe != 0:
        raise DiagramError(f"writhe must be zero, got {d.writhe}")
    if d.strands_max is not None and d.strands_max < widest:
        raise DiagramError(f"strands_max {d.strands_max} is below the actual width {widest}")
    return LongKnotDiagram(tuple(normalized), widest, d.name)


def braid_closure_diagram(word: Sequence[int], strands: int, kinks: Sequence[str],
                          extra_pairs: Sequence[str] = (), name: str = "") -> LongKnotDiagram:
    """Long knot from the closure of a braid word, all closing arcs on the left.

    Generator g acts on braid strands |g|, |g|+1 as X1+ (g > 0) or X1- (g < 0).
    Each closing arc gets one kink, with kinds taken from ``kinks``;
    every entry of ``extra_pairs`` appends a curl pair of that kind so the
    writhe can be balanced.
    """
    if len(kinks) != strands - 1:
        raise ValueError("need one kink per closing arc")
    events: list[tuple[str, int]] = []
    for t in range(strands - 1):
        events += [("cup", t), (kinks[t], t)]
    for g in word:
        if g == 0 or abs(g) >= strands:
            raise ValueError(f"braid generator {g} out of range for {strands} strands")
        events.append(("X1+" if g > 0 else "X1-", strands - 2 + abs(g)))
    for t in range(strands - 1):
        events.append(("cap", strands - 2 - t))
    d = LongKnotDiagram.from_events(events, name)
    for kind in extra_pairs:
        d = insert_curl_pair(d, len(d.slices), 0, (kind, kind))
    return d


def insert_curl_pair(d: LongKnotDiagram, index: int, pos: int,
                     kinds: tuple[str, str] = ("X4+", "X4-")) -> LongKnotDiagram:
    """Insert a cup-kink, kink-cap pair on the upward strand at ``pos`` before slice ``index``."""
    gadget = (Slice("cup", pos + 1), Slice(kinds[0], pos + 1), Slice(kinds[1], pos), Slice("cap", pos))
    bare = tuple(Slice(s.event, s.pos) for s in d.slices)
    return LongKnotDiagram(bare[:index] + gadget + bare[index:], None, f"{d.name}+curls" if d.name else "")


def slide_translate(d: LongKnotDiagram) -> LongKnotDiagram:
    """Same long knot with the whole diagram slid two places right behind a zigzag."""
    body = tuple(Slice(s.event, s.pos + 2) for s in d.slices)
    return LongKnotDiagram((Slice("cup", 0),) + body + (Slice("cap", 1),), None, f"{d.name}+slid" if d.name else "")


_BUILTIN_FILES = {
    "4_1": "4_1.json",
    "4_1_braid": "4_1_braid.json",
    "3_1": "3_1.json",
}


def builtin_diagram(name: str) -> LongKnotDiagram:
    """Shipped diagrams: 4_1, 4_1_braid (closure of a 3-braid), 3_1, unknot, unknot_kinks."""
    if name == "unknot":
        return validate_diagram(LongKnotDiagram((), None, "unknot"))
    if name == "unknot_kinks":
        return validate_diagram(replace(insert_curl_pair(LongKnotDiagram(()), 0, 0), name="unknot_kinks"))
    if name not in _BUILTIN_FILES:
        raise DiagramError(f"no built-in diagram {name!r}; choose from "
                           f"{', '.join(list(_BUILTIN_FILES) + ['unknot', 'unknot_kinks'])}")
    text = resources.files("descjones.statesum").joinpath("data", _BUILTIN_FILES[name]).read_text()
    return validate_diagram(LongKnotDiagram.from_json(json.loads(text)))


BUILTIN_DIAGRAMS = tuple(_BUILTIN_FILES) + ("unknot", "unknot_kinks")

# which knot each shipped diagram represents
DIAGRAM_KNOT = {"4_1": "4_1", "4_1_braid": "4_1", "3_1": "3_1", "unknot": None, "unknot_kinks": None}
