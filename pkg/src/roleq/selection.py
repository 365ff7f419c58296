"""Prototype selection by QA consistency, and the role lexicon.

A candidate prototype is judged by how well a question-answering oracle
recovers gold arguments from its contextualized form: each candidate is
contextualized against a sample of argument instances, the oracle answers,
and token-level F1 against the gold span decides. The winning prototype
per role goes into the lexicon; entries whose mean F1 falls below the
coverage threshold are dropped.

Candidate-by-sample scoring is embarrassingly parallel (each worker needs
its own oracle connection); assembling the lexicon is a single merge.
"""

from __future__ import annotations

import hashlib
import json
import random
from collections import Counter
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional, Protocol

from .errors import DataError, FormatError
from .prototypes import CandidateTable, is_adjunct, span_iou  # noqa: F401 (span_iou re-exported)

DEFAULT_SEED = 20211109
CORE_SAMPLE_SIZE = 50
ADJUNCT_SAMPLE_SIZE = 100
COVERAGE_THRESHOLD = 0.5


# --------------------------------------------------------------------------
# Metrics

def token_f1(predicted: Iterable[str], gold: Iterable[str]) -> float:
    """Token-multiset F1. Both empty scores 1.0; exactly one empty, 0.0."""
    pred = Counter(predicted)
    gold = Counter(gold)
    if not pred and not gold:
        return 1.0
    if not pred or not gold:
        return 0.0
    overlap = sum((pred & gold).values())
    if overlap == 0:
        return 0.0
    precision = overlap / sum(pred.values())
    recall = overlap / sum(gold.values())
    return 2 * precision * recall / (precision + recall)


def answer_tokens(text: Optional[str]) -> list[str]:
    """Whitespace tokens, lowercased, as compared by the QA-F1 convention."""
    if not text:
        return []
    return text.lower().split()


# --------------------------------------------------------------------------
# Gold argument corpus

@dataclass(frozen=True)
class GoldInstance:
    sentence_id: str
    tokens: tuple[str, ...]
    predicate_index: int
    lemma: str
    sense: str
    role: str
    span: tuple[int, int]

    def span_text(self) -> str:
        return " ".join(self.tokens[self.span[0]:self.span[1]])


def read_gold_corpus(path) -> list[GoldInstance]:
    """`{"sentence_id", "tokens", "predicate": {...}, "arguments": [...]}`
    per line; one GoldInstance per argument."""
    instances = []
    with open(path, encoding="utf-8") as handle:
        for number, line in enumerate(handle, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                obj = json.loads(line)
                predicate = obj["predicate"]
                for arg in obj["arguments"]:
                    instances.append(GoldInstance(
                        sentence_id=str(obj["sentence_id"]),
                        tokens=tuple(obj["tokens"]),
                        predicate_index=int(predicate["index"]),
                        lemma=str(predicate["lemma"]).lower(),
                        sense=str(predicate.get("sense", "")),
                        role=str(arg["role"]),
                        span=(int(arg["start"]), int(arg["end"])),
                    ))
            except (KeyError, ValueError, TypeError) as exc:
                raise DataError(str(path), number, str(exc)) from exc
    return instances


def sample_arguments(corpus: list[GoldInstance], lemma: Optional[str],
                     sense: Optional[str], role: str,
                     seed: int = DEFAULT_SEED) -> list[GoldInstance]:
    """Reproducible uniform sample of gold arguments for one role key.

    Core roles take up to 50 instances of the exact (lemma, sense); adjunct
    roles take up to 100 from any sense of the lemma, or from any predicate
    at all when ``lemma`` is None or "*". Undersupplied keys return
    everything available.
    """
    if is_adjunct(role):
        wanted = ADJUNCT_SAMPLE_SIZE

        def match(instance):
            if instance.role != role:
                return False
            return lemma in (None, "*") or instance.lemma == lemma
    else:
        wanted = CORE_SAMPLE_SIZE

        def match(instance):
            return (instance.role == role and instance.lemma == lemma
                    and instance.sense == (sense or ""))

    pool = [instance for instance in corpus if match(instance)]
    if len(pool) <= wanted:
        return pool
    return random.Random(seed).sample(pool, wanted)


def derive_seed(base: int, *parts: str) -> int:
    """Stable per-key seed so keys can be scored in parallel."""
    digest = hashlib.sha256(("/".join(parts) + f"#{base}").encode()).digest()
    return int.from_bytes(digest[:8], "big")


# --------------------------------------------------------------------------
# QA-consistency selection

class QaOracle(Protocol):
    """Answers a question over a passage; None means unanswerable.

    Implementations must be deterministic for a fixed configuration.
    """

    def answer(self, question: str, passage: str) -> Optional[str]: ...


# contextualizer(prototype_text, instance) -> question text
Contextualizer = Callable[[str, GoldInstance], str]


@dataclass
class SelectionResult:
    prototype: str
    mean_f1: Optional[float]
    sample_count: int
    flagged_samples: int = 0


def select_prototype(candidates: Counter | dict[str, int],
                     samples: list[GoldInstance],
                     contextualizer: Contextualizer,
                     oracle: Optional[QaOracle]) -> SelectionResult:
    """Pick the candidate whose contextualized questions best recover gold
    arguments.

    Mean token F1 over the samples decides; ties break toward the higher
    aggregation count and then the lexicographically smaller text, so the
    result is invariant under candidate-list permutation. Without samples
    (or without an oracle) the most frequent candidate wins and mean F1 is
    absent. Oracle or contextualizer failures score that sample 0 for the
    candidate and are flagged.
    """
    counts = Counter(candidates)
    if not counts:
        raise FormatError("no prototype candidates for this role")
    if not samples or oracle is None:
        text = min(counts, key=lambda t: (-counts[t], t))
        return SelectionResult(text, None, 0)

    best: Optional[tuple] = None
    best_result: Optional[SelectionResult] = None
    for text in sorted(counts):
        total = 0.0
        flagged = 0
        for instance in samples:
            try:
                question = contextualizer(text, instance)
                answer = oracle.answer(question, " ".join(instance.tokens))
            except Exception:
                flagged += 1
                continue
            total += token_f1(answer_tokens(answer),
                              answer_tokens(instance.span_text()))
        mean = total / len(samples)
        rank = (-mean, -counts[text], text)
        if best is None or rank < best:
            best = rank
            best_result = SelectionResult(text, mean, len(samples), flagged)
    return best_result


# --------------------------------------------------------------------------
# Role lexicon

@dataclass(frozen=True)
class LexiconEntry:
    lemma: str
    sense: str          # "*" for adjunct wildcards
    role: str
    prototype: str
    mean_f1: Optional[float]
    sample_count: int


@dataclass
class RoleLexicon:
    """(lemma, sense, role) -> selected prototype with its consistency score."""

    entries: dict[tuple[str, str, str], LexiconEntry] = field(default_factory=dict)

    def add(self, entry: LexiconEntry) -> None:
        self.entries[(entry.lemma, entry.sense, entry.role)] = entry

    def get(self, lemma: str, sense: str, role: str) -> Optional[LexiconEntry]:
        return self.entries.get((lemma, sense, role))

    def senses_of(self, lemma: str, role: str) -> list[LexiconEntry]:
        return [entry for (lm, _, rl), entry in sorted(self.entries.items())
                if lm == lemma and rl == role]

    def __len__(self) -> int:
        return len(self.entries)


def write_lexicon_tsv(lexicon: RoleLexicon, handle) -> None:
    """`lemma<TAB>sense<TAB>role<TAB>prototype<TAB>mean_f1<TAB>sample_count`."""
    for key in sorted(lexicon.entries):
        entry = lexicon.entries[key]
        score = "-" if entry.mean_f1 is None else f"{entry.mean_f1:.4f}"
        handle.write(f"{entry.lemma}\t{entry.sense}\t{entry.role}\t"
                     f"{entry.prototype}\t{score}\t{entry.sample_count}\n")


def read_lexicon_tsv(path) -> RoleLexicon:
    lexicon = RoleLexicon()
    with open(path, encoding="utf-8") as handle:
        for number, line in enumerate(handle, start=1):
            line = line.rstrip("\n")
            if not line or line.startswith("#"):
                continue
            fields = line.split("\t")
            if len(fields) != 6:
                raise DataError(str(path), number, "lexicon row needs 6 fields")
            lemma, sense, role, proto, score, count = fields
            lexicon.add(LexiconEntry(
                lemma, sense, role, proto,
                None if score == "-" else float(score), int(count)))
    return lexicon


@dataclass
class CoverageReport:
    instances_total: int = 0
    instances_covered: int = 0


def build_and_filter_lexicon(table: CandidateTable, corpus: list[GoldInstance],
                             contextualizer: Contextualizer,
                             oracle: Optional[QaOracle],
                             threshold: float = COVERAGE_THRESHOLD,
                             seed: int = DEFAULT_SEED,
                             ) -> tuple[RoleLexicon, CoverageReport]:
    """Select one prototype per role key and drop low-consistency entries.

    Core keys produce one entry per (lemma, sense) attested in the corpus;
    adjunct keys produce per-lemma wildcard-sense entries plus global
    wildcard-lemma entries. Entries with mean F1 below ``threshold`` are
    dropped; unmeasured entries (no oracle or no samples) are kept.
    """
    lexicon = RoleLexicon()
    senses = sorted({(i.lemma, i.sense) for i in corpus})
    for lemma, role in sorted(table.per_lemma):
        counts = table.candidates(lemma, role)
        if is_adjunct(role):
            keys = [(lemma, "*")]
        else:
            keys = [(lemma, sense) for lm, sense in senses if lm == lemma] or [(lemma, "")]
        for lemma_key, sense_key in keys:
            samples = sample_arguments(corpus, lemma_key, sense_key, role,
                                       derive_seed(seed, lemma_key, sense_key, role))
            result = select_prototype(counts, samples, contextualizer, oracle)
            if result.mean_f1 is not None and result.mean_f1 < threshold:
                continue
            lexicon.add(LexiconEntry(lemma_key, sense_key, role, result.prototype,
                                     result.mean_f1, result.sample_count))
    for role in sorted(table.adjunct_global):
        counts = table.candidates("*", role)
        samples = sample_arguments(corpus, None, None, role,
                                   derive_seed(seed, "*", "*", role))
        result = select_prototype(counts, samples, contextualizer, oracle)
        if result.mean_f1 is not None and result.mean_f1 < threshold:
            continue
        lexicon.add(LexiconEntry("*", "*", role, result.prototype,
                                 result.mean_f1, result.sample_count))

    report = CoverageReport()
    for instance in corpus:
        report.instances_total += 1
        if _lookup_for_coverage(lexicon, instance) is not None:
            report.instances_covered += 1
    return lexicon, report


def _lookup_for_coverage(lexicon: RoleLexicon, instance: GoldInstance):
    from .pipeline import lookup_prototype_entry
    return lookup_prototype_entry(lexicon, instance.lemma, instance.sense, instance.role)
