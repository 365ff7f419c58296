"""Declarative readings of slot questions.

Every question corresponds to a declarative clause with a gap at the
extracted position. Because the slot grammar is closed, the possible
readings can be enumerated outright; ambiguity (particle vs. preposition,
locative vs. adverbial, which object of a ditransitive is extracted) shows
up as multiple readings, resolved by frame majority and then by fixed
heuristics.

A reading is a list of clause positions. Each position carries

* a function key: ``("subj",)``, ``("obj",)``, ``("obj2",)``,
  ``("pp", prep)``, ``("prt", prep)``, ``("loc",)``, ``("xcomp",)``,
* its origin: the slot whose content occupies it, or ``"wh"`` for the gap,
* the placeholder occupying it, when the origin is an overt slot.

Adverbial wh questions map to the clause without the adverbial; their gap
function is ``("adverbial", wh)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .grammar import WH_ADVERBIAL, WH_ARGUMENT, SlotQuestion

SUBJ, OBJ, OBJ2, LOC, XCOMP = ("subj",), ("obj",), ("obj2",), ("loc",), ("xcomp",)


def pp(prep: str) -> tuple:
    return ("pp", prep)


def prt(prep: str) -> tuple:
    return ("prt", prep)


def adverbial(wh: str) -> tuple:
    return ("adverbial", wh)


@dataclass(frozen=True)
class Position:
    function: tuple
    origin: str                      # "subj" | "obj" | "misc" | "wh"
    placeholder: Optional[str] = None

    @property
    def is_gap(self) -> bool:
        return self.origin == "wh"


@dataclass(frozen=True)
class DeclarativeReading:
    voice: str
    positions: tuple[Position, ...]
    tie_flagged: bool = False

    @property
    def gap(self) -> tuple:
        for position in self.positions:
            if position.is_gap:
                return position.function
        raise AssertionError("reading without a gap")

    @property
    def subj_filler(self) -> Optional[str]:
        return self._filler(SUBJ)

    @property
    def obj_filler(self) -> Optional[str]:
        return self._filler(OBJ)

    def _filler(self, function: tuple) -> Optional[str]:
        for position in self.positions:
            if position.function == function and not position.is_gap:
                return position.placeholder
        return None

    @property
    def misc_arg(self) -> Optional[tuple]:
        """The third argument's function key (pp/prt/loc/xcomp/obj2), if any."""
        for position in self.positions:
            if position.function[0] in ("pp", "prt", "loc", "xcomp", "obj2"):
                return position.function
        return None

    def position_of_slot(self, slot: str) -> Optional[Position]:
        for position in self.positions:
            if position.origin == slot:
                return position
        return None


@dataclass(frozen=True)
class StructureKey:
    """Canonical clause shape used to decide alignment compatibility.

    Tense, modality, negation and animacy are already absent (positions hold
    placeholders only); voice is kept. A preposition with an object (overt
    or extracted) is distinct from a bare particle, and the preposition
    itself is part of the key.
    """

    voice: str
    has_subj: bool
    has_obj: bool
    misc: tuple  # ("none",) | ("obj2",) | ("pp", prep) | ("prt", prep) | ("loc",) | ("xcomp",)

    def sort_token(self) -> tuple:
        return (self.voice, self.has_subj, self.has_obj, self.misc)

    def stripped(self) -> tuple:
        """The key without its third-argument component (correspondence 4)."""
        return (self.voice, self.has_subj, self.has_obj)


def structure_key(reading: DeclarativeReading) -> StructureKey:
    has_subj = any(p.function == SUBJ for p in reading.positions)
    has_obj = any(p.function == OBJ for p in reading.positions)
    misc = reading.misc_arg or ("none",)
    return StructureKey(reading.voice, has_subj, has_obj, misc)


# --------------------------------------------------------------------------
# Enumeration

def _third_position(q: SlotQuestion) -> Optional[Position]:
    """The overt third argument built from the PREP/MISC slots (never the gap)."""
    if q.prep is not None and q.misc is not None:
        return Position(pp(q.prep), "misc", q.misc)
    if q.prep is not None:
        return Position(prt(q.prep), "misc", None)
    if q.misc == "somewhere":
        return Position(LOC, "misc", q.misc)
    if q.misc in ("do something", "doing something"):
        return Position(XCOMP, "misc", q.misc)
    if q.misc is not None:
        return Position(OBJ2, "misc", q.misc)
    return None


def enumerate_readings(q: SlotQuestion) -> list[DeclarativeReading]:
    """All declarative readings licensed by the slot grammar for ``q``.

    At least one reading exists for every valid question.
    """
    voice = q.voice
    readings: list[DeclarativeReading] = []

    def reading(*positions: Optional[Position]) -> None:
        present = tuple(p for p in positions if p is not None)
        readings.append(DeclarativeReading(voice, present))

    subj = (Position(SUBJ, "subj", q.subj) if q.subj is not None
            else Position(SUBJ, "wh"))
    overt_obj = Position(OBJ, "obj", q.obj) if q.obj is not None else None
    third = _third_position(q)

    if q.wh in WH_ARGUMENT:
        if q.subj is None:
            # Empty SBJ slot: the wh word is the subject.
            reading(subj, overt_obj, third)
        elif q.obj is None and q.prep is not None and q.misc is None:
            # Stranded preposition: extracted prepositional object, or the
            # preposition is a particle and the object itself is extracted.
            reading(subj, Position(pp(q.prep), "wh"))
            reading(subj, Position(OBJ, "wh"), Position(prt(q.prep), "misc", None))
        elif q.obj is None:
            reading(subj, Position(OBJ, "wh"), third)
        elif q.prep is not None and q.misc is None:
            # Overt object plus stranded preposition.
            reading(subj, overt_obj, Position(pp(q.prep), "wh"))
        elif q.misc is None and q.prep is None:
            # Ditransitive: either object may be the extraction site. The
            # overt OBJ slot occupies the other position.
            reading(subj, overt_obj, Position(OBJ2, "wh"))
            reading(subj, Position(OBJ, "wh"), Position(OBJ2, "obj", q.obj))
        else:
            reading(subj, overt_obj, third)
    elif q.wh == "where":
        reading(subj, overt_obj, third, Position(adverbial(q.wh), "wh"))
        if q.prep is None and q.misc is None:
            reading(subj, overt_obj, Position(LOC, "wh"))
        elif q.prep is not None and q.misc is None:
            reading(subj, overt_obj, Position(pp(q.prep), "wh"))
    else:
        reading(subj, overt_obj, third, Position(adverbial(q.wh), "wh"))
        if q.prep is not None and q.misc is None:
            reading(subj, overt_obj, Position(pp(q.prep), "wh"))
    # Adverbial gaps never sit inside the clause: drop them from positions
    # used for keys, but keep them as the gap marker.
    return readings


# --------------------------------------------------------------------------
# Resolution

def _is_particle_tie(a: DeclarativeReading, b: DeclarativeReading) -> Optional[DeclarativeReading]:
    """Preposition/particle ambiguity: prefer the gap after the preposition."""
    gaps = {a.gap[0]: a, b.gap[0]: b}
    if "pp" in gaps and set(gaps) & {"obj", "adverbial"}:
        return gaps["pp"]
    return None


def _is_locative_tie(a: DeclarativeReading, b: DeclarativeReading) -> Optional[DeclarativeReading]:
    """Locative/adverbial ambiguity for "where": prefer the adverbial."""
    gaps = {a.gap[0]: a, b.gap[0]: b}
    if "loc" in gaps and "adverbial" in gaps:
        return gaps["adverbial"]
    return None


def _is_ditransitive_tie(a: DeclarativeReading, b: DeclarativeReading,
                         wh: str) -> Optional[DeclarativeReading]:
    """Ditransitive extraction: who takes the first object, what the second."""
    gaps = {a.gap[0]: a, b.gap[0]: b}
    if set(gaps) == {"obj", "obj2"}:
        return gaps["obj"] if wh == "who" else gaps["obj2"]
    return None


def resolve_reading(q: SlotQuestion,
                    frame_readings: list[DeclarativeReading]) -> DeclarativeReading:
    """Pick one reading for ``q`` given its siblings' resolved readings.

    The reading whose structure key is shared with the most siblings wins.
    Ties fall back, in order, to the particle, locative and ditransitive
    heuristics; a tie that survives all three takes the lexicographically
    smallest key and is flagged.
    """
    candidates = enumerate_readings(q)
    if len(candidates) == 1:
        return candidates[0]
    sibling_keys = [structure_key(r).sort_token() for r in frame_readings]
    scored = [(sibling_keys.count(structure_key(c).sort_token()), c) for c in candidates]
    best = max(score for score, _ in scored)
    leaders = [c for score, c in scored if score == best]
    if best > 0 and len(leaders) == 1:
        return leaders[0]
    if len(leaders) == 1:
        return leaders[0]
    for heuristic in (_is_particle_tie, _is_locative_tie,
                      lambda a, b: _is_ditransitive_tie(a, b, q.wh)):
        for i in range(len(leaders)):
            for j in range(i + 1, len(leaders)):
                pick = heuristic(leaders[i], leaders[j])
                if pick is not None:
                    return pick
    fallback = min(leaders, key=lambda c: structure_key(c).sort_token())
    return DeclarativeReading(fallback.voice, fallback.positions, tie_flagged=True)


def resolve_frame(questions: list[SlotQuestion]) -> list[DeclarativeReading]:
    """Resolve every question of one frame.

    Unambiguous questions resolve trivially; each ambiguous question is then
    resolved once against the unambiguous siblings' readings, which keeps the
    outcome independent of entry order.
    """
    enumerations = [enumerate_readings(q) for q in questions]
    anchors = [(i, options[0]) for i, options in enumerate(enumerations)
               if len(options) == 1]
    resolved = []
    for i, q in enumerate(questions):
        if len(enumerations[i]) == 1:
            resolved.append(enumerations[i][0])
        else:
            siblings = [reading for j, reading in anchors if j != i]
            resolved.append(resolve_reading(q, siblings))
    return resolved
