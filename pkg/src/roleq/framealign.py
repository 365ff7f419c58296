"""Frame alignment: grounding placeholder pronouns in sibling answers.

Questions about the same predicate instance describe one underlying clause
from different angles. Where two questions share their clause structure,
the answer to one fills a placeholder pronoun of the other. Four extra
correspondences extend the exact-structure rule across closely related
shapes:

1. the object of a transitive clause (with a locative or no third
   argument) aligns with the subject of a passive clause (with a locative,
   a by-PP, or no third argument),
2. the subject of a transitive clause without a third argument aligns with
   the prepositional object of a passive by-PP,
3. the locative argument of a transitive clause aligns with the
   where-adverbial of a transitive clause without a third argument,
4. subjects align with subjects (and objects with objects) whenever the
   clause structures agree after dropping the third argument from both.

Substituted spans are decapitalized when they open the sentence, and
subject/verb agreement is repaired afterwards, by a masked-LM backend when
one is connected and by a deterministic plural heuristic otherwise.

Frames are independent of each other; a corpus build may fan frames out to
parallel workers and merge the fill statistics additively.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field, replace
from importlib import resources
from typing import Callable, Iterable, Optional

from .errors import DataError, FormatError
from .grammar import (
    InflectionLexicon,
    PLURAL_OF_AUX,
    SINGULAR_OF_AUX,
    SlotQuestion,
    load_default_lexicon,
    parse_slots,
    render_parts,
    render_tokens,
    slots_record,
)
from .prototypes import to_prototype
from .readings import DeclarativeReading, resolve_frame, structure_key

PREDICATE_START = "PREDICATE-START"
PREDICATE_END = "PREDICATE-END"
SEPARATOR = "</s>"
PROTO_MARKER = "[SEP]"


# --------------------------------------------------------------------------
# Frames

@dataclass(frozen=True)
class FrameEntry:
    question: SlotQuestion
    answers: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class Frame:
    """One predicate instance with its question/answer entries."""

    sentence_id: str
    tokens: tuple[str, ...]
    predicate_index: int
    predicate_lemma: str
    predicate_sense: Optional[str]
    entries: tuple[FrameEntry, ...]

    def validate(self) -> "Frame":
        n = len(self.tokens)
        if not 0 <= self.predicate_index < n:
            raise FormatError(f"predicate index {self.predicate_index} outside sentence")
        if not self.entries:
            raise FormatError("frame has no entries")
        for entry in self.entries:
            for start, end in entry.answers:
                if not (0 <= start < end <= n):
                    raise FormatError(f"answer span [{start}, {end}) outside sentence")
        return self

    def span_text(self, span: tuple[int, int]) -> str:
        return " ".join(self.tokens[span[0]:span[1]])


def frame_from_dict(obj: dict) -> Frame:
    predicate = obj["predicate"]
    entries = []
    for entry in obj["entries"]:
        question = parse_slots(entry["slots"])
        answers = tuple((int(a["start"]), int(a["end"])) for a in entry.get("answers", ()))
        entries.append(FrameEntry(question, answers))
    return Frame(
        sentence_id=str(obj["sentence_id"]),
        tokens=tuple(obj["tokens"]),
        predicate_index=int(predicate["index"]),
        predicate_lemma=str(predicate["lemma"]).lower(),
        predicate_sense=predicate.get("sense"),
        entries=tuple(entries),
    ).validate()


def frame_to_dict(frame: Frame) -> dict:
    predicate = {"index": frame.predicate_index, "lemma": frame.predicate_lemma}
    if frame.predicate_sense is not None:
        predicate["sense"] = frame.predicate_sense
    return {
        "sentence_id": frame.sentence_id,
        "tokens": list(frame.tokens),
        "predicate": predicate,
        "entries": [
            {"slots": slots_record(e.question),
             "answers": [{"start": s, "end": t} for s, t in e.answers]}
            for e in frame.entries
        ],
    }


def read_frames_jsonl(path) -> list[Frame]:
    frames = []
    with open(path, encoding="utf-8") as handle:
        for number, line in enumerate(handle, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                frames.append(frame_from_dict(json.loads(line)))
            except (KeyError, ValueError, TypeError, FormatError) as exc:
                raise DataError(str(path), number, str(exc)) from exc
    return frames


# --------------------------------------------------------------------------
# Placeholder alignment

# Rule identifiers recorded in fill provenance.
RULE_BASE = "base"
RULE_OBJ_PASSIVE_SUBJ = "obj-passive-subj"
RULE_SUBJ_BY_PP = "subj-by-pp"
RULE_LOC_WHERE = "loc-where"
RULE_STRIP_MISC = "strip-misc"


@dataclass(frozen=True)
class Fill:
    slot: str
    span: tuple[int, int]
    source_entry: int
    rule: str
    text: str


def _passive_shape_for_corr1(key) -> bool:
    return key.voice == "passive" and key.misc in (("none",), ("loc",), ("pp", "by"))


def _transitive_shape_for_corr1(key) -> bool:
    return key.voice == "active" and key.has_obj and key.misc in (("none",), ("loc",))


def _candidate_rules(placeholder_fn, placeholder_key, answer_fn, answer_key,
                     extras: bool) -> Optional[str]:
    """The first rule under which an answer may fill a placeholder."""
    if answer_fn == placeholder_fn and answer_key == placeholder_key:
        return RULE_BASE
    if not extras:
        return None
    # 1. transitive object <-> passive subject
    if placeholder_fn == ("obj",) and answer_fn == ("subj",) \
            and _transitive_shape_for_corr1(placeholder_key) \
            and _passive_shape_for_corr1(answer_key):
        return RULE_OBJ_PASSIVE_SUBJ
    if placeholder_fn == ("subj",) and answer_fn == ("obj",) \
            and _passive_shape_for_corr1(placeholder_key) \
            and _transitive_shape_for_corr1(answer_key):
        return RULE_OBJ_PASSIVE_SUBJ
    # 2. transitive subject <-> passive by-PP object
    if placeholder_fn == ("subj",) and answer_fn == ("pp", "by") \
            and placeholder_key.voice == "active" and placeholder_key.has_obj \
            and placeholder_key.misc == ("none",) and answer_key.voice == "passive":
        return RULE_SUBJ_BY_PP
    if placeholder_fn == ("pp", "by") and answer_fn == ("subj",) \
            and placeholder_key.voice == "passive" \
            and answer_key.voice == "active" and answer_key.has_obj \
            and answer_key.misc == ("none",):
        return RULE_SUBJ_BY_PP
    # 3. transitive locative <- where-adverbial of a transitive clause
    if placeholder_fn == ("loc",) and answer_fn == ("adverbial", "where") \
            and placeholder_key.has_obj and answer_key.has_obj \
            and placeholder_key.voice == answer_key.voice \
            and answer_key.misc == ("none",):
        return RULE_LOC_WHERE
    # 4. subj<->subj / obj<->obj with the third argument stripped
    if placeholder_fn == answer_fn and placeholder_fn in (("subj",), ("obj",)) \
            and placeholder_key.stripped() == answer_key.stripped():
        return RULE_STRIP_MISC
    return None


_PLACEHOLDER_SLOTS = ("subj", "obj", "misc")
_FILLABLE = ("something", "someone", "somewhere")


def align_placeholders(frame: Frame, readings: list[DeclarativeReading],
                       extras: bool = True) -> dict[int, dict[str, Fill]]:
    """Candidate answers for every placeholder, one winning fill per slot.

    Returns {entry index: {slot name: Fill}}. Several candidates for one
    placeholder resolve to the shortest answer span, then the earliest in
    the sentence, then the lowest source entry index.
    """
    keys = [structure_key(r) for r in readings]
    fills: dict[int, dict[str, Fill]] = {}
    for i, entry in enumerate(frame.entries):
        reading = readings[i]
        chosen: dict[str, Fill] = {}
        for slot in _PLACEHOLDER_SLOTS:
            position = reading.position_of_slot(slot)
            if position is None or position.placeholder not in _FILLABLE:
                continue
            candidates: list[tuple[tuple, Fill]] = []
            for j, sibling in enumerate(frame.entries):
                if j == i:
                    continue
                rule = _candidate_rules(position.function, keys[i],
                                        readings[j].gap, keys[j], extras)
                if rule is None:
                    continue
                for span in sibling.answers:
                    fill = Fill(slot, span, j, rule, frame.span_text(span))
                    candidates.append(((span[1] - span[0], span[0], j), fill))
            if candidates:
                chosen[slot] = min(candidates, key=lambda c: c[0])[1]
        if chosen:
            fills[i] = chosen
    return fills


# --------------------------------------------------------------------------
# Grammar correction and substitution

def decapitalize(text: str, span: tuple[int, int], tokens: Iterable[str]) -> str:
    """Undo sentence-initial capitalization on an answer span.

    Applies only when the span starts the sentence, the first word's second
    character is lowercase (keeps acronyms) and, for multi-word spans, the
    second word starts lowercase (keeps many proper nouns).
    """
    if span[0] != 0 or not text:
        return text
    words = text.split()
    first = words[0]
    if len(first) < 2 or not first[1].islower():
        return text
    if len(words) > 1 and not words[1][0].islower():
        return text
    return text[0].lower() + text[1:]


def plural_heuristic(filler: str, exceptions: Optional[frozenset] = None) -> bool:
    """Deterministic stand-in for the masked-LM agreement chooser."""
    exceptions = exceptions if exceptions is not None else load_singular_exceptions()
    head = filler.split()[-1].lower().strip(".,;:!?\"'") if filler.split() else ""
    if head in ("they", "we", "people", "children", "men", "women"):
        return True
    return head.endswith("s") and head not in exceptions


_SINGULAR_EXCEPTIONS: Optional[frozenset] = None


def load_singular_exceptions() -> frozenset:
    global _SINGULAR_EXCEPTIONS
    if _SINGULAR_EXCEPTIONS is None:
        ref = resources.files("roleq").joinpath("data/singular_exceptions.txt")
        words = set()
        for line in ref.read_text(encoding="utf-8").splitlines():
            line = line.strip()
            if line and not line.startswith("#"):
                words.add(line.lower())
        _SINGULAR_EXCEPTIONS = frozenset(words)
    return _SINGULAR_EXCEPTIONS


def heuristic_chooser(masked_text: str, options: list[str], filler: str) -> str:
    """Choose between [plural, singular] forms with :func:`plural_heuristic`."""
    return options[0] if plural_heuristic(filler) else options[1]


def fill_parts(q: SlotQuestion, fills: dict[str, str],
               lexicon: Optional[InflectionLexicon] = None) -> list[tuple[str, str]]:
    lexicon = lexicon or load_default_lexicon()
    parts = render_parts(q, lexicon)
    return [(slot, fills.get(slot, text)) for slot, text in parts]


def _parts_text(parts: list[tuple[str, str]]) -> str:
    text = " ".join(text for _, text in parts)
    return text[0].upper() + text[1:] + "?"


def fill_question(q: SlotQuestion, fills: dict[str, Fill],
                  tokens: Iterable[str],
                  lexicon: Optional[InflectionLexicon] = None) -> str:
    """Substitute answers for placeholder pronouns and render the question.

    ``fills`` maps slot names to :class:`Fill` records for this question;
    unfilled placeholders keep their pronouns.
    """
    substitutions = {
        slot: decapitalize(fill.text, fill.span, tokens)
        for slot, fill in fills.items()
    }
    return _parts_text(fill_parts(q, substitutions, lexicon))


Chooser = Callable[[str, list[str], str], str]


def fix_agreement(question: str, subject_filler: Optional[str],
                  chooser: Chooser = heuristic_chooser) -> str:
    """Repair the finite element's number after a subject substitution.

    Replaces at most one token: the auxiliary directly after the wh word
    (the only finite element a subject-bearing question can have). The
    chooser sees the question with that auxiliary masked and the
    [plural, singular] options, mirroring the masked-LM protocol; the
    default chooser is the plural heuristic.
    """
    if not subject_filler:
        return question
    tokens = question.split()
    index = 2 if len(tokens) > 1 and tokens[0].lower() == "how" \
        and tokens[1] in ("much", "long") else 1
    if index >= len(tokens):
        return question
    bare = tokens[index].rstrip("?")
    if bare not in PLURAL_OF_AUX and bare not in SINGULAR_OF_AUX:
        return question
    singular = bare if bare in PLURAL_OF_AUX else SINGULAR_OF_AUX[bare]
    plural = PLURAL_OF_AUX[singular]
    masked = " ".join(t if i != index else "[MASK]" for i, t in enumerate(tokens))
    choice = chooser(masked, [plural, singular], subject_filler)
    if choice not in (plural, singular):
        return question
    tokens[index] = tokens[index].replace(bare, choice)
    return " ".join(tokens)


# --------------------------------------------------------------------------
# Frame-aligned corpus construction

@dataclass(frozen=True)
class AlignedEntry:
    question: SlotQuestion
    prototype: str
    contextualized: str
    fills: dict[str, Fill]
    unfilled: int


@dataclass(frozen=True)
class AlignedFrame:
    frame: Frame
    entries: tuple[AlignedEntry, ...]
    placeholders_total: int
    filled_base: int
    filled_with_extras: int
    excluded: tuple[str, ...] = ()


def _placeholder_count(frame: Frame) -> int:
    count = 0
    for entry in frame.entries:
        for value in (entry.question.subj, entry.question.obj, entry.question.misc):
            if value in _FILLABLE:
                count += 1
    return count


def build_frame_aligned(frame: Frame, extras: bool = True,
                        chooser: Chooser = heuristic_chooser,
                        lexicon: Optional[InflectionLexicon] = None) -> AlignedFrame:
    """Resolve readings, align and substitute placeholders, fix agreement.

    Fill statistics always report both the base rule alone and the base
    rule plus the extra correspondences, so coverage of the extras is
    visible whether or not they were applied to the output.
    """
    lexicon = lexicon or load_default_lexicon()
    readings = resolve_frame([e.question for e in frame.entries])
    base_fills = align_placeholders(frame, readings, extras=False)
    extra_fills = align_placeholders(frame, readings, extras=True)
    used = extra_fills if extras else base_fills
    excluded = _corr1_exclusions(frame, readings)

    entries = []
    for i, entry in enumerate(frame.entries):
        fills = used.get(i, {})
        text = fill_question(entry.question, fills, frame.tokens, lexicon)
        if "subj" in fills:
            text = fix_agreement(text, fills["subj"].text, chooser)
        placeholders = sum(1 for v in (entry.question.subj, entry.question.obj,
                                       entry.question.misc) if v in _FILLABLE)
        entries.append(AlignedEntry(
            question=entry.question,
            prototype=render_tokens(to_prototype(entry.question, lexicon), lexicon),
            contextualized=text,
            fills=fills,
            unfilled=placeholders - len(fills),
        ))
    return AlignedFrame(
        frame=frame,
        entries=tuple(entries),
        placeholders_total=_placeholder_count(frame),
        filled_base=sum(len(f) for f in base_fills.values()),
        filled_with_extras=sum(len(f) for f in extra_fills.values()),
        excluded=excluded,
    )


def _corr1_exclusions(frame: Frame, readings: list[DeclarativeReading]) -> tuple[str, ...]:
    """Passive subjects whose clause shape keeps correspondence 1 from
    firing (a PP other than by-), noted so exclusions stay auditable."""
    keys = [structure_key(r) for r in readings]
    notes = []
    for i, reading in enumerate(readings):
        position = reading.position_of_slot("subj")
        if position is None or position.placeholder not in _FILLABLE:
            continue
        key = keys[i]
        if key.voice != "passive" or key.misc[0] != "pp" or key.misc == ("pp", "by"):
            continue
        has_transitive_obj_answer = any(
            readings[j].gap == ("obj",) and _transitive_shape_for_corr1(keys[j])
            and frame.entries[j].answers
            for j in range(len(readings)) if j != i)
        if has_transitive_obj_answer:
            notes.append(
                f"entry {i}: passive subject with {key.misc[1]}-PP left out of "
                f"the transitive-object correspondence")
    return tuple(notes)


def aligned_to_dict(aligned: AlignedFrame) -> dict:
    obj = frame_to_dict(aligned.frame)
    for entry_obj, entry in zip(obj["entries"], aligned.entries):
        entry_obj["prototype"] = entry.prototype
        entry_obj["contextualized"] = entry.contextualized
        entry_obj["fills"] = [
            {"slot": f.slot, "start": f.span[0], "end": f.span[1],
             "source_entry": f.source_entry, "rule": f.rule, "text": f.text}
            for f in entry.fills.values()
        ]
        entry_obj["unfilled"] = entry.unfilled
    obj["placeholder_stats"] = {
        "total": aligned.placeholders_total,
        "filled_base": aligned.filled_base,
        "filled_with_extras": aligned.filled_with_extras,
    }
    return obj


# --------------------------------------------------------------------------
# Sequence-to-sequence example format

def seq2seq_input(tokens: Iterable[str], predicate_index: int, lemma: str,
                  prototype: str) -> str:
    """Model input: the sentence with the predicate token surrounded by
    text markers, the separator, the predicate lemma, the prototype."""
    marked = []
    for i, token in enumerate(tokens):
        if i == predicate_index:
            marked.extend((PREDICATE_START, token, PREDICATE_END))
        else:
            marked.append(token)
    return " ".join(marked) + f" {SEPARATOR} {lemma} {PROTO_MARKER} {prototype}"


def build_seq2seq_example(frame: Frame, entry: AlignedEntry) -> tuple[str, str]:
    """(input, target) training pair for one contextualized entry."""
    source = seq2seq_input(frame.tokens, frame.predicate_index,
                           frame.predicate_lemma, entry.prototype)
    return source, entry.contextualized


def write_seq2seq_tsv(pairs: Iterable[tuple[str, str]], handle) -> None:
    for source, target in pairs:
        handle.write(f"{source}\t{target}\n")
