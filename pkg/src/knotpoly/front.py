"""Legendrian fronts as combinatorial words.

A front is a closed sequence of events on a strand stack, read left to right:

    ("L", i)   left cusp: birth of two adjacent strands at levels i, i+1
    ("R", i)   right cusp: death of the adjacent strands at levels i, i+1
    ("X", i)   transverse crossing of the strands at levels i, i+1

Two planar resolutions of the cusps matter:

  * rounding     L -> cup, R -> cap, X -> negative crossing.  This is the
    underlying plane-curve diagram; its cups and caps keep the cusp
    combinatorics.
  * morsification  as rounding, but each right cusp becomes a curl followed
    by a cap, so every right cusp contributes +1 to the writhe.  The curl
    handedness is pinned by requiring D(curl) = a * D(strand) in the skein
    engine.

Front crossings resolve to the crossing type for which the two printed
state-sum examples reproduce term by term; in the event encoding used here
that is sign -1.

The classical invariants are read off the morsification M:

    tb = -writhe(M)        maslov = -rotation(M)

A cusp is oriented upward when the traversal passes through it moving up;
for a left cusp this means the lower branch points into the cusp, for a
right cusp that the lower branch points into the cusp from the left.  In
terms of thread directions: left cusp up iff dir(lower) = -1, right cusp up
iff dir(lower) = +1.
"""

from __future__ import annotations

from typing import Iterable, Optional, Sequence

from .diagram import MorseDiagram, DiagramError, ParseError

FrontEvent = tuple

FRONT_CROSS_SIGN = -1
CURL_SIGN = -1


class FrontWord:
    """A validated closed front with a chosen orientation."""

    __slots__ = ("events", "dirs", "_rounded")

    def __init__(self, events: Iterable[FrontEvent],
                 dirs: Optional[Sequence[int]] = None):
        self.events = tuple(events)
        for idx, ev in enumerate(self.events):
            if ev[0] not in ("L", "R", "X") or len(ev) != 2:
                raise DiagramError(f"event {idx}: bad front event {ev!r}")
        rounded_events = []
        for kind, i in self.events:
            if kind == "L":
                rounded_events.append(("cup", i))
            elif kind == "R":
                rounded_events.append(("cap", i))
            else:
                rounded_events.append(("x", i, FRONT_CROSS_SIGN))
        if dirs is None:
            skeleton = MorseDiagram(rounded_events)
            seed = {c: -1 for c in skeleton.components}
            dirs = skeleton._propagate(seed)
        self._rounded = MorseDiagram(rounded_events, dirs)
        self.dirs = self._rounded.dirs

    # -- resolutions ---------------------------------------------------------

    def rounded(self) -> MorseDiagram:
        """Plane-curve diagram with cusps rounded to plain turns."""
        return self._rounded

    def morsify(self) -> MorseDiagram:
        """Regular diagram with curled right cusps; same threads, same dirs."""
        events = []
        for kind, i in self.events:
            if kind == "L":
                events.append(("cup", i))
            elif kind == "R":
                events.append(("x", i, CURL_SIGN))
                events.append(("cap", i))
            else:
                events.append(("x", i, FRONT_CROSS_SIGN))
        return MorseDiagram(events, self.dirs)

    # -- structure -----------------------------------------------------------

    @property
    def components(self) -> tuple[int, ...]:
        return self._rounded.components

    def component_count(self) -> int:
        return len(self._rounded.components)

    def cusp_count(self) -> int:
        return 2 * sum(1 for ev in self.events if ev[0] == "L")

    def crossing_count(self) -> int:
        return sum(1 for ev in self.events if ev[0] == "X")

    def left_cusps(self) -> list[tuple[int, int, int]]:
        """(event index, lower thread, upper thread) per left cusp."""
        return [(idx, lo, hi) for idx, lo, hi in self._rounded._cup_events]

    def right_cusps(self) -> list[tuple[int, int, int]]:
        return [(idx, lo, hi) for idx, lo, hi in self._rounded._cap_events]

    def crossings(self) -> list[tuple[int, int, int]]:
        """(event index, lower-in thread, upper-in thread) per crossing."""
        return [(idx, lo, hi) for idx, lo, hi, _s in self._rounded.cross_info]

    def with_orientation(self, flips: Sequence[bool]) -> "FrontWord":
        flip_of = dict(zip(self.components, flips))
        new_dirs = tuple(-d if flip_of[self._rounded.component_of[t]] else d
                         for t, d in enumerate(self.dirs))
        return FrontWord(self.events, new_dirs)

    def reversed(self) -> "FrontWord":
        return FrontWord(self.events, tuple(-d for d in self.dirs))

    # -- cusp orientation classes ---------------------------------------------

    def cusp_classes(self) -> dict[str, int]:
        """Counts of the four oriented cusp classes under the current dirs."""
        d = self.dirs
        lu = sum(1 for _i, lo, _hi in self._rounded._cup_events if d[lo] == -1)
        rd = sum(1 for _i, lo, _hi in self._rounded._cap_events if d[lo] == -1)
        nl = len(self._rounded._cup_events)
        nr = len(self._rounded._cap_events)
        return {"left_up": lu, "left_down": nl - lu,
                "right_down": rd, "right_up": nr - rd}

    def to_json(self) -> dict:
        return {"events": [list(ev) for ev in self.events]}

    def text(self) -> str:
        return "front: " + "; ".join(f"{k} {i + 1}" for k, i in self.events)

    def __repr__(self) -> str:
        return f"FrontWord({self.cusp_count()} cusps, {self.crossing_count()} crossings)"

    def ascii_art(self) -> str:
        from .diagram import ascii_render
        return ascii_render(self._rounded.events,
                            glyphs={"cup": "<", "cap": ">", 1: "X", -1: "X"})


class LegendrianInvariants:
    """tb, maslov and the basic front counts."""

    __slots__ = ("tb", "maslov", "cusp_count", "crossing_count")

    def __init__(self, tb: int, maslov: int, cusp_count: int, crossing_count: int):
        self.tb = tb
        self.maslov = maslov
        self.cusp_count = cusp_count
        self.crossing_count = crossing_count

    def to_json(self) -> dict:
        return {"tb": self.tb, "maslov": self.maslov,
                "cusps": self.cusp_count, "crossings": self.crossing_count}

    def __repr__(self) -> str:
        return f"LegendrianInvariants(tb={self.tb}, maslov={self.maslov})"


def morsify(f: FrontWord) -> MorseDiagram:
    """Module-level alias for FrontWord.morsify."""
    return f.morsify()


def classical_invariants(f: FrontWord) -> LegendrianInvariants:
    """tb = -w and maslov = -r of the morsification."""
    m = f.morsify()
    return LegendrianInvariants(tb=-m.writhe, maslov=-m.rotation,
                                cusp_count=f.cusp_count(),
                                crossing_count=f.crossing_count())


def front_orient(f: FrontWord, flips: Sequence[bool]) -> FrontWord:
    """The front with components flipped; cusp classes via cusp_classes()."""
    return f.with_orientation(flips)


def parse_front(text: str) -> FrontWord:
    """Parse `front: (L <i> | R <i> | X <i>)(';' ...)*` with 1-based levels."""
    head, sep, rest = text.partition(":")
    if not sep or head.strip() != "front":
        raise ParseError("expected 'front:' prefix")
    events = []
    rest = rest.strip()
    chunks = [c for c in (piece.strip() for piece in rest.split(";")) if c] if rest else []
    for pos, chunk in enumerate(chunks):
        parts = chunk.split()
        if len(parts) != 2 or parts[0] not in ("L", "R", "X"):
            raise ParseError(f"item {pos}: expected 'L|R|X <level>', got {chunk!r}")
        try:
            level = int(parts[1])
        except ValueError:
            raise ParseError(f"item {pos}: level {parts[1]!r} is not an integer") from None
        if level < 1:
            raise ParseError(f"item {pos}: levels are 1-based")
        events.append((parts[0], level - 1))
    try:
        return FrontWord(events)
    except DiagramError as exc:
        raise ParseError(f"invalid front: {exc}") from exc


def saucer_front() -> FrontWord:
    """The two-cusp unknot front (tb = -1, maslov = 0)."""
    return FrontWord([("L", 0), ("R", 0)])


def crossed_saucer_front() -> FrontWord:
    """Two cusps around one crossing (tb = -2, |maslov| = 1).

    Selected by the documented search over fronts with at most four cusps and
    two crossings: it is the one whose morsification has R = (a^3 - a)/z and
    whose state expansion has exactly four nonvanishing terms.
    """
    return FrontWord([("L", 0), ("X", 0), ("R", 0)])
