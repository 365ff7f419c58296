"""End-to-end role question generation.

Given a sentence with a marked predicate and a role, look up the role's
prototype question, then contextualize it: a connected sequence-to-sequence
backend rewrites the prototype against the passage, and without one a
deterministic rule-based path detects the predicate instance's tense,
modality and negation from its surface form, re-imposes them on the
prototype, substitutes any placeholder fills supplied as hints, and repairs
capitalization and agreement. Both paths preserve the prototype's
role-bearing structure.

The backend speaks newline-delimited JSON envelopes
``{"id", "type", "payload"}`` over a child process's standard streams (or
any pair of text streams); requests and responses strictly alternate per
connection, so a pool of connections provides parallelism.
"""

from __future__ import annotations

import itertools
import json
import queue
import shlex
import subprocess
import threading
from dataclasses import dataclass, field, replace as dc_replace
from importlib import resources
from typing import Optional

from .errors import BackendError, DataError, ProtocolError
from .framealign import decapitalize, fill_parts, fix_agreement, seq2seq_input, _parts_text
from .grammar import (
    FUTURE,
    InflectionLexicon,
    MODALS,
    PAST_TENSE,
    PRESENT,
    SlotQuestion,
    TamvnSignature,
    apply_tamvn,
    load_default_lexicon,
    parse_surface,
)
from .prototypes import ADJUNCT_ROLES, is_adjunct, to_prototype
from .selection import LexiconEntry, RoleLexicon

DEFAULT_TIMEOUT = 30.0


# --------------------------------------------------------------------------
# Requests

@dataclass(frozen=True)
class RoleQuestionRequest:
    """One predicate instance to ask about.

    ``fills`` optionally maps placeholder slots (subj/obj/misc) to token
    spans of the sentence or to literal strings; ``tamvn`` optionally
    overrides surface tense/modality detection.
    """

    tokens: tuple[str, ...]
    predicate_index: int
    lemma: str
    sense: str = ""
    fills: dict = field(default_factory=dict)
    tamvn: Optional[TamvnSignature] = None


# --------------------------------------------------------------------------
# Prototype lookup

def lookup_prototype_entry(lexicon: RoleLexicon, lemma: str, sense: str,
                           role: str) -> Optional[LexiconEntry]:
    """Exact hit, then another sense of the same lemma, then (for adjunct
    roles) the per-lemma wildcard and the global wildcard."""
    entry = lexicon.get(lemma, sense, role)
    if entry is not None:
        return entry
    others = lexicon.senses_of(lemma, role)
    if others:
        return others[0]
    if is_adjunct(role):
        entry = lexicon.get(lemma, "*", role)
        if entry is not None:
            return entry
        return lexicon.get("*", "*", role)
    return None


def lookup_prototype(lexicon: RoleLexicon, lemma: str, sense: str, role: str,
                     lexicon_infl: Optional[InflectionLexicon] = None
                     ) -> Optional[SlotQuestion]:
    """The stored prototype as a parsed question, or None when missing."""
    entry = lookup_prototype_entry(lexicon, lemma, sense, role)
    if entry is None:
        return None
    return parse_surface(entry.prototype, lexicon_infl or load_default_lexicon())


# --------------------------------------------------------------------------
# Surface TAMVN detection

_MODAL_PERFECT = {m + "'ve": m for m in MODALS if m not in ("can", "may", "shall", "will")}

_ANIMATE_CUES: Optional[frozenset] = None


def _load_animate_cues() -> frozenset:
    global _ANIMATE_CUES
    if _ANIMATE_CUES is None:
        ref = resources.files("roleq").joinpath("data/animate_cues.txt")
        words = set()
        for line in ref.read_text(encoding="utf-8").splitlines():
            line = line.strip()
            if line and not line.startswith("#"):
                words.add(line.lower())
        _ANIMATE_CUES = frozenset(words)
    return _ANIMATE_CUES


def looks_animate(text: str) -> bool:
    """Conservative cue list: personal pronouns, honorifics, person words."""
    words = text.lower().replace(".", "").split()
    return any(word in _load_animate_cues() for word in words)


def detect_tamvn(tokens: tuple[str, ...], predicate_index: int, lemma: str,
                 lexicon: Optional[InflectionLexicon] = None) -> TamvnSignature:
    """Read tense, modality, negation and aspect off the predicate's
    surface form and the auxiliaries within the three preceding tokens.

    Past and past-participle forms coincide for most verbs; a preceding
    have-auxiliary reads as perfect, a be-auxiliary as a passive instance
    (tense only), and a bare form as simple past.
    """
    lexicon = lexicon or load_default_lexicon()
    surface = tokens[predicate_index].lower()
    inflections = lexicon.lookup(lemma)
    forms = {tag for tag in ("stem", "present3sg", "past", "past-participle",
                             "present-participle")
             if inflections.form(tag) == surface}
    window = [t.lower() for t in tokens[max(0, predicate_index - 3):predicate_index]]

    negated = any(t == "not" or t.endswith("n't") for t in window)
    modal = None
    tense = PRESENT
    perfect = False
    progressive = False
    have_aux = None
    be_aux = None
    for token in window:
        bare = token[:-3] if token.endswith("n't") else token
        if bare in _MODAL_PERFECT:
            modal = _MODAL_PERFECT[bare]
            perfect = True
        elif bare in MODALS:
            modal = bare
        elif token.endswith("'ll"):
            modal = "will"
        elif bare in ("has", "have", "had") or token == "'ve":
            have_aux = "had" if bare == "had" else "have"
        elif bare in ("is", "are", "am", "was", "were", "be", "been", "being"):
            be_aux = bare
    if modal == "will":
        tense = FUTURE
    elif modal is not None:
        tense = PRESENT
    elif "present-participle" in forms:
        progressive = True
        tense = PAST_TENSE if be_aux in ("was", "were") else PRESENT
    elif have_aux is not None and "past-participle" in forms:
        perfect = True
        tense = PAST_TENSE if have_aux == "had" else PRESENT
    elif be_aux is not None and "past-participle" in forms:
        tense = PAST_TENSE if be_aux in ("was", "were") else PRESENT
    elif "past" in forms:
        tense = PAST_TENSE
    else:
        tense = PRESENT
    return TamvnSignature(tense=tense, modal=modal, negated=negated,
                          perfect=perfect, progressive=progressive)


# --------------------------------------------------------------------------
# Contextualization

@dataclass
class ContextualizedQuestion:
    text: str
    used_backend: bool
    warning: Optional[str] = None


def _hint_fills(request: RoleQuestionRequest) -> dict[str, str]:
    fills = {}
    for slot, value in request.fills.items():
        if isinstance(value, str):
            fills[slot] = value
        else:
            start, end = int(value[0]), int(value[1])
            text = " ".join(request.tokens[start:end])
            fills[slot] = decapitalize(text, (start, end), request.tokens)
    return fills


def rule_based_contextualize(prototype: SlotQuestion, request: RoleQuestionRequest,
                             lexicon: Optional[InflectionLexicon] = None,
                             chooser=None) -> str:
    """Deterministic contextualization: re-impose the instance's detected
    (or hinted) TAMVN on the prototype, substitute hinted fills, then fix
    capitalization and agreement."""
    from .framealign import heuristic_chooser

    lexicon = lexicon or load_default_lexicon()
    chooser = chooser or heuristic_chooser
    sig = request.tamvn or detect_tamvn(request.tokens, request.predicate_index,
                                        request.lemma, lexicon)
    fills = _hint_fills(request)
    if sig.animacy_subj == "n/a" and "subj" in fills and looks_animate(fills["subj"]):
        sig = dc_replace(sig, animacy_subj="animate")
    adjusted = apply_tamvn(prototype, sig, lexicon)
    text = _parts_text(fill_parts(adjusted, fills, lexicon))
    if "subj" in fills:
        text = fix_agreement(text, fills["subj"], chooser)
    return text


def contextualize(prototype: SlotQuestion, request: RoleQuestionRequest,
                  backend: Optional["BackendConnection"] = None,
                  lexicon: Optional[InflectionLexicon] = None,
                  chooser=None) -> ContextualizedQuestion:
    """Contextualize a prototype for one predicate instance.

    With a backend, the sequence-to-sequence input is sent over the wire and
    the response validated (nonempty, ends with "?"); a protocol failure
    falls back to the rule-based path with a warning, while a syntactically
    invalid backend answer is an error. Without a backend the rule-based
    path runs directly.
    """
    lexicon = lexicon or load_default_lexicon()
    from .grammar import render_tokens
    if backend is not None:
        source = seq2seq_input(request.tokens, request.predicate_index,
                               request.lemma, render_tokens(prototype, lexicon))
        try:
            payload = backend.call("contextualize", {"input": source})
        except BackendError as exc:
            text = rule_based_contextualize(prototype, request, lexicon, chooser)
            return ContextualizedQuestion(text, False, warning=str(exc))
        text = payload.get("question")
        if not text or not text.endswith("?"):
            raise BackendError(f"backend returned an invalid question: {text!r}")
        return ContextualizedQuestion(text, True)
    text = rule_based_contextualize(prototype, request, lexicon, chooser)
    return ContextualizedQuestion(text, False)


# --------------------------------------------------------------------------
# Batch generation

@dataclass
class GeneratedQuestions:
    questions: dict[str, str] = field(default_factory=dict)
    missing: list[str] = field(default_factory=list)
    duplicates: list[tuple[str, str]] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)


def generate_role_questions(request: RoleQuestionRequest, lexicon: RoleLexicon,
                            core_roles: list[str],
                            adjunct_roles: tuple[str, ...] = ADJUNCT_ROLES,
                            backend: Optional["BackendConnection"] = None,
                            inflections: Optional[InflectionLexicon] = None,
                            chooser=None) -> GeneratedQuestions:
    """One question per role of the predicate, answerable or not.

    Roles without a prototype are reported under ``missing``; a role is
    never dropped because its answer is absent from the sentence. Role
    pairs that produced identical question text are reported under
    ``duplicates`` as a diagnostic.
    """
    inflections = inflections or load_default_lexicon()
    out = GeneratedQuestions()
    roles = list(dict.fromkeys(list(core_roles) + list(adjunct_roles)))
    for role in roles:
        prototype = lookup_prototype(lexicon, request.lemma, request.sense, role,
                                     inflections)
        if prototype is None:
            out.missing.append(role)
            continue
        result = contextualize(prototype, request, backend, inflections, chooser)
        if result.warning:
            out.warnings.append(f"{role}: {result.warning}")
        out.questions[role] = result.text
    seen: dict[str, str] = {}
    for role, text in out.questions.items():
        if text in seen:
            out.duplicates.append((seen[text], role))
        else:
            seen[text] = role
    return out


def read_role_inventory(path) -> dict[tuple[str, str], list[tuple[str, str]]]:
    """Role inventory TSV `lemma<TAB>sense<TAB>role<TAB>gloss`; glosses are
    reporting-only."""
    inventory: dict[tuple[str, str], list[tuple[str, str]]] = {}
    with open(path, encoding="utf-8") as handle:
        for number, line in enumerate(handle, start=1):
            line = line.rstrip("\n")
            if not line or line.startswith("#"):
                continue
            fields = line.split("\t")
            if len(fields) < 3:
                raise DataError(str(path), number, "inventory row needs >= 3 fields")
            lemma, sense, role = fields[0], fields[1], fields[2]
            gloss = fields[3] if len(fields) > 3 else ""
            inventory.setdefault((lemma.lower(), sense), []).append((role, gloss))
    return inventory


# --------------------------------------------------------------------------
# Backend wire protocol

class BackendConnection:
    """Line-protocol client over a pair of text streams.

    One request is in flight per connection at any time; concurrent callers
    serialize on an internal lock. Responses are matched to requests by id.
    """

    def __init__(self, writer, reader, timeout: float = DEFAULT_TIMEOUT):
        self._writer = writer
        self._timeout = timeout
        self._ids = itertools.count(1)
        self._lock = threading.Lock()
        self._lines: queue.Queue = queue.Queue()
        self._reader_thread = threading.Thread(
            target=self._pump, args=(reader,), daemon=True)
        self._reader_thread.start()

    def _pump(self, reader) -> None:
        try:
            for line in reader:
                self._lines.put(line)
        except ValueError:
            pass  # stream closed
        finally:
            self._lines.put(None)

    def call(self, kind: str, payload: dict) -> dict:
        """Send one envelope and return the matching response payload."""
        with self._lock:
            request_id = next(self._ids)
            message = {"id": request_id, "type": kind, "payload": payload}
            try:
                self._writer.write(json.dumps(message, ensure_ascii=False) + "\n")
                self._writer.flush()
            except (BrokenPipeError, ValueError) as exc:
                raise BackendError(f"backend write failed: {exc}") from exc
            try:
                line = self._lines.get(timeout=self._timeout)
            except queue.Empty:
                raise BackendError(f"backend timed out after {self._timeout}s")
            if line is None:
                raise BackendError("backend closed the stream")
            try:
                response = json.loads(line)
            except json.JSONDecodeError as exc:
                raise ProtocolError(f"malformed backend response: {line!r}") from exc
            if response.get("id") != request_id:
                raise ProtocolError(
                    f"response id {response.get('id')!r} does not match request {request_id}")
            if "error" in response:
                raise BackendError(f"backend error: {response['error']}")
            payload = response.get("payload")
            if not isinstance(payload, dict):
                raise ProtocolError("backend response has no payload object")
            return payload

    def close(self) -> None:
        pass


def backend_call(connection: BackendConnection, kind: str, payload: dict) -> dict:
    """Send one request over an open connection; see BackendConnection.call."""
    return connection.call(kind, payload)


class ProcessBackend(BackendConnection):
    """Backend served by a child process over its standard streams."""

    def __init__(self, command: str | list[str], timeout: float = DEFAULT_TIMEOUT):
        argv = shlex.split(command) if isinstance(command, str) else list(command)
        try:
            self._process = subprocess.Popen(
                argv, stdin=subprocess.PIPE, stdout=subprocess.PIPE,
                text=True, bufsize=1)
        except OSError as exc:
            raise BackendError(f"cannot start backend {argv!r}: {exc}") from exc
        super().__init__(self._process.stdin, self._process.stdout, timeout)

    def close(self) -> None:
        if self._process.poll() is None:
            try:
                self._process.stdin.close()
            except OSError:
                pass
            try:
                self._process.wait(timeout=5)
            except subprocess.TimeoutExpired:
                self._process.kill()

    def __enter__(self):
        return self

    def __exit__(self, *exc_info):
        self.close()


class BackendQaOracle:
    """QaOracle adapter speaking the qa message type."""

    def __init__(self, connection: BackendConnection):
        self._connection = connection

    def answer(self, question: str, passage: str) -> Optional[str]:
        payload = self._connection.call("qa", {"question": question,
                                               "passage": passage})
        return payload.get("answer")


class BackendChooser:
    """Agreement chooser speaking the mlm_choice message type."""

    def __init__(self, connection: BackendConnection):
        self._connection = connection

    def __call__(self, masked_text: str, options: list[str], filler: str) -> str:
        payload = self._connection.call(
            "mlm_choice", {"text": masked_text, "options": list(options)})
        return payload.get("choice", options[1])
