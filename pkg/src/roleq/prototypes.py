"""Context-independent question prototypes and role-labelled aggregation.

A prototype is a question stripped of everything specific to one text:
modality, negation, aspect, tense and animacy are removed while voice,
wh adverbials, prepositions and placeholder positions stay. The AUX/VERB
slots are rewritten by exactly three cases:

* passive voice: aux "is" plus the past participle,
* active voice with an empty SBJ slot: no aux, present 3sg form,
* active voice with an overt SBJ: aux "does" plus the stem.

This module also aligns question/answer pairs to labelled argument spans
by span overlap and aggregates the resulting prototypes per role.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Optional

from .errors import AlignmentError, FormatError
from .grammar import (
    PROTOTYPE_SIGNATURE,
    InflectionLexicon,
    SlotQuestion,
    apply_tamvn,
    load_default_lexicon,
    render_tokens,
)

CORE_ROLES = ("A0", "A1", "A2", "A3", "A4", "A5")
ADJUNCT_ROLES = ("AM-LOC", "AM-TMP", "AM-MNR", "AM-CAU", "AM-EXT", "AM-GOL")
ROLE_LABELS = frozenset(CORE_ROLES) | frozenset(ADJUNCT_ROLES)


def is_adjunct(role: str) -> bool:
    return role.startswith("AM-")


def to_prototype(q: SlotQuestion, lexicon: Optional[InflectionLexicon] = None) -> SlotQuestion:
    """Strip tense, modality, negation, aspect and animacy; keep structure.

    Idempotent, and total on valid questions.
    """
    return apply_tamvn(q, PROTOTYPE_SIGNATURE, lexicon)


def prototype_text(q: SlotQuestion, lexicon: Optional[InflectionLexicon] = None) -> str:
    """Canonical lowercase text of a question's prototype."""
    return render_tokens(to_prototype(q, lexicon), lexicon or load_default_lexicon())


# --------------------------------------------------------------------------
# Joint question/argument records

@dataclass(frozen=True)
class JointRecord:
    """One QA pair aligned to one labelled argument span."""

    sentence_id: str
    lemma: str
    sense: str
    role: str
    question: SlotQuestion
    answer_span: tuple[int, int]
    source: str = "parser-aligned"
    ambiguous: bool = False  # answer tied between two arguments at equal IoU


def span_iou(a: tuple[int, int], b: tuple[int, int]) -> float:
    """Intersection-over-union of two token index intervals [start, end)."""
    inter = max(0, min(a[1], b[1]) - max(a[0], b[0]))
    if inter == 0:
        return 0.0
    union = (a[1] - a[0]) + (b[1] - b[0]) - inter
    return inter / union


def align_qa_to_srl(frame, srl_args, threshold: float = 0.4,
                    source: str = "parser-aligned") -> list[JointRecord]:
    """Join a frame's QA pairs with labelled argument spans.

    ``frame`` is a :class:`roleq.framealign.Frame`; ``srl_args`` carries the
    predicate position plus (role, start, end) spans for the same sentence.
    An answer aligns to the argument with the highest IoU at or above the
    threshold; equal IoU goes to the earlier span and flags the record.
    """
    if srl_args.predicate_index != frame.predicate_index:
        raise AlignmentError(
            f"predicate mismatch: questions at {frame.predicate_index}, "
            f"arguments at {srl_args.predicate_index}")
    records = []
    args = sorted(srl_args.arguments, key=lambda a: (a[1], a[2]))
    for entry in frame.entries:
        for span in entry.answers:
            scored = [(span_iou(span, (start, end)), role, (start, end))
                      for role, start, end in args]
            scored = [s for s in scored if s[0] >= threshold]
            if not scored:
                continue
            best = max(scored, key=lambda s: s[0])
            ties = [s for s in scored if s[0] == best[0]]
            chosen = min(ties, key=lambda s: s[2])
            records.append(JointRecord(
                sentence_id=frame.sentence_id,
                lemma=frame.predicate_lemma,
                sense=frame.predicate_sense or "",
                role=chosen[1],
                question=entry.question,
                answer_span=span,
                source=source,
                ambiguous=len(ties) > 1,
            ))
    return records


@dataclass(frozen=True)
class SrlArguments:
    """Pre-computed argument spans for one predicate instance."""

    predicate_index: int
    arguments: tuple[tuple[str, int, int], ...]  # (role, start, end)


# --------------------------------------------------------------------------
# Candidate aggregation

@dataclass
class CandidateTable:
    """Prototype counts per (lemma, role), plus a global pool for adjuncts.

    Senses of the same lemma share one entry; adjunct-role prototypes are
    additionally pooled across all predicates under the wildcard lemma "*".
    """

    per_lemma: dict[tuple[str, str], Counter] = field(default_factory=dict)
    adjunct_global: dict[str, Counter] = field(default_factory=dict)

    def add(self, lemma: str, role: str, proto: str, count: int = 1) -> None:
        self.per_lemma.setdefault((lemma, role), Counter())[proto] += count
        if is_adjunct(role):
            self.adjunct_global.setdefault(role, Counter())[proto] += count

    def candidates(self, lemma: str, role: str) -> Counter:
        if lemma == "*":
            return Counter(self.adjunct_global.get(role, Counter()))
        return Counter(self.per_lemma.get((lemma, role), Counter()))

    def keys(self) -> list[tuple[str, str]]:
        keys = sorted(self.per_lemma)
        keys.extend(("*", role) for role in sorted(self.adjunct_global))
        return keys


def aggregate_candidates(records: Iterable[JointRecord],
                         lexicon: Optional[InflectionLexicon] = None) -> CandidateTable:
    """Count each record's prototype under its (lemma, role) key."""
    lexicon = lexicon or load_default_lexicon()
    table = CandidateTable()
    for record in records:
        proto = prototype_text(record.question, lexicon)
        table.add(record.lemma, record.role, proto)
    return table


def write_candidates_tsv(table: CandidateTable, path) -> None:
    """`lemma<TAB>role<TAB>prototype_text<TAB>count`, wildcard lemma `*`."""
    with open(path, "w", encoding="utf-8") as handle:
        for lemma, role in table.keys():
            counter = table.candidates(lemma, role)
            for proto, count in sorted(counter.items()):
                handle.write(f"{lemma}\t{role}\t{proto}\t{count}\n")


def read_candidates_tsv(path) -> CandidateTable:
    table = CandidateTable()
    with open(path, encoding="utf-8") as handle:
        for number, line in enumerate(handle, start=1):
            line = line.rstrip("\n")
            if not line or line.startswith("#"):
                continue
            fields = line.split("\t")
            if len(fields) != 4:
                raise FormatError(f"{path}:{number}: candidate row needs 4 fields")
            lemma, role, proto, count = fields
            if lemma == "*":
                table.adjunct_global.setdefault(role, Counter())[proto] += int(count)
            else:
                table.per_lemma.setdefault((lemma, role), Counter())[proto] += int(count)
    return table
