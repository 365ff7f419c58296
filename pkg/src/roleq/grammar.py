"""Seven-slot question grammar.

A question is represented as seven typed slots (WH, AUX, SBJ, VERB, OBJ,
PREP, MISC) plus a verb inflection tag. The WH and VERB slots are always
present; AUX and the VERB slot's auxiliary chain jointly encode tense,
modality, negation, aspect and voice. All slot vocabularies are closed:
placeholder pronouns stand in for real arguments, so the whole question
space is enumerable and every transformation in this package is exact.

The module provides:

* :class:`SlotQuestion` and validation against the closed grammar,
* parsing from structured records (:func:`parse_slots`) and from surface
  text (:func:`parse_surface`), and rendering back (:func:`render`),
* verb inflection lookup with a regular-morphology fallback
  (:class:`InflectionLexicon`, :func:`inflect`),
* decomposition of the finite chain into a tense/aspect/modality/voice/
  negation signature and its inverse (:func:`decompose_tamvn`,
  :func:`apply_tamvn`).

Everything here is a pure function over immutable values; the inflection
lexicon is read-only after load, so concurrent use is safe.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, replace
from importlib import resources
from typing import Iterable, Optional

from .errors import FormatError, GrammarError, ParseError, VocabularyError

# --------------------------------------------------------------------------
# Closed vocabularies

WH_WORDS = ("who", "what", "when", "where", "why", "how", "how much", "how long")
WH_ARGUMENT = ("who", "what")            # extract an argument position
WH_ADVERBIAL = ("when", "where", "why", "how", "how much", "how long")

SUBJ_PLACEHOLDERS = ("something", "someone")
OBJ_PLACEHOLDERS = ("something", "someone")
MISC_PLACEHOLDERS = ("something", "someone", "somewhere", "do something", "doing something")

# Inflection tags for the VERB slot.
STEM = "stem"
PRESENT3SG = "present3sg"
PAST = "past"
PAST_PARTICIPLE = "past-participle"
PRESENT_PARTICIPLE = "present-participle"
VERB_FORMS = (STEM, PRESENT3SG, PAST, PAST_PARTICIPLE, PRESENT_PARTICIPLE)

# Non-finite auxiliaries that may prefix the VERB slot ("be fixed",
# "have been fixed", "being fixed", ...).
CHAIN_PREFIX_TOKENS = ("be", "been", "being", "have")

MODALS = ("can", "could", "may", "might", "must", "shall", "should", "will", "would")

# Negated finite auxiliaries, mapped to their positive form. may/shall have
# no usable contraction and cannot be negated in this grammar.
NEGATED_AUX = {
    "don't": "do", "doesn't": "does", "didn't": "did",
    "isn't": "is", "aren't": "are", "wasn't": "was", "weren't": "were",
    "hasn't": "has", "haven't": "have", "hadn't": "had",
    "can't": "can", "couldn't": "could", "mightn't": "might",
    "mustn't": "must", "shouldn't": "should",
    "won't": "will", "wouldn't": "would",
}
POSITIVE_TO_NEGATED = {v: k for k, v in NEGATED_AUX.items()}

DO_FORMS = ("do", "does", "did")
BE_FORMS = ("is", "are", "was", "were")
HAVE_FORMS = ("has", "have", "had")

AUX_VOCAB = frozenset(DO_FORMS) | frozenset(BE_FORMS) | frozenset(HAVE_FORMS) \
    | frozenset(MODALS) | frozenset(NEGATED_AUX)

# Singular <-> plural pairs for the finite auxiliaries that agree in number.
PLURAL_OF_AUX = {
    "does": "do", "is": "are", "was": "were", "has": "have",
    "doesn't": "don't", "isn't": "aren't", "wasn't": "weren't", "hasn't": "haven't",
}
SINGULAR_OF_AUX = {v: k for k, v in PLURAL_OF_AUX.items()}

PREPOSITIONS = frozenset((
    "about", "above", "across", "after", "against", "along", "around", "as",
    "at", "before", "behind", "below", "beneath", "beside", "between", "by",
    "down", "during", "for", "from", "in", "inside", "into", "like", "near",
    "of", "off", "on", "onto", "out", "outside", "over", "past", "through",
    "to", "toward", "towards", "under", "until", "up", "upon", "with",
    "within", "without",
))

PRESENT, PAST_TENSE, FUTURE = "present", "past", "future"
ACTIVE, PASSIVE = "active", "passive"
ANIMATE, INANIMATE, NA = "animate", "inanimate", "n/a"


def _aux_category(aux: Optional[str]) -> str:
    if aux is None:
        return "none"
    positive = NEGATED_AUX.get(aux, aux)
    if positive in DO_FORMS:
        return "do"
    if positive in BE_FORMS:
        return "be"
    if positive in HAVE_FORMS:
        return "have"
    if positive in MODALS:
        return "modal"
    raise VocabularyError(f"unknown auxiliary {aux!r}")


def _aux_tense(aux: str) -> str:
    positive = NEGATED_AUX.get(aux, aux)
    if positive in ("did", "was", "were", "had"):
        return PAST_TENSE
    if positive == "will":
        return FUTURE
    return PRESENT


# Legal (aux category, chain prefix, verb form) combinations with their
# perfect/progressive/voice reading. Tense and negation come from the aux
# token itself; for the bare rows they come from the verb form.
_CHAIN_TABLE = {
    ("none", (), PRESENT3SG): (False, False, ACTIVE),
    ("none", (), PAST): (False, False, ACTIVE),
    ("do", (), STEM): (False, False, ACTIVE),
    ("modal", (), STEM): (False, False, ACTIVE),
    ("modal", ("have",), PAST_PARTICIPLE): (True, False, ACTIVE),
    ("modal", ("be",), PRESENT_PARTICIPLE): (False, True, ACTIVE),
    ("modal", ("be",), PAST_PARTICIPLE): (False, False, PASSIVE),
    ("modal", ("have", "been"), PRESENT_PARTICIPLE): (True, True, ACTIVE),
    ("modal", ("have", "been"), PAST_PARTICIPLE): (True, False, PASSIVE),
    ("be", (), PRESENT_PARTICIPLE): (False, True, ACTIVE),
    ("be", (), PAST_PARTICIPLE): (False, False, PASSIVE),
    ("be", ("being",), PAST_PARTICIPLE): (False, True, PASSIVE),
    ("have", (), PAST_PARTICIPLE): (True, False, ACTIVE),
    ("have", ("been",), PRESENT_PARTICIPLE): (True, True, ACTIVE),
    ("have", ("been",), PAST_PARTICIPLE): (True, False, PASSIVE),
}


# --------------------------------------------------------------------------
# Inflection lexicon

@dataclass(frozen=True)
class VerbInflections:
    """The five inflected forms of one verb. ``guessed`` marks regular-rule
    fallbacks for lemmas missing from the lexicon."""

    stem: str
    present3sg: str
    past: str
    past_participle: str
    present_participle: str
    guessed: bool = False

    def form(self, tag: str) -> str:
        return {
            STEM: self.stem,
            PRESENT3SG: self.present3sg,
            PAST: self.past,
            PAST_PARTICIPLE: self.past_participle,
            PRESENT_PARTICIPLE: self.present_participle,
        }[tag]


_VOWELS = set("aeiou")


def _ends_cvc(word: str) -> bool:
    # Final-consonant doubling guard: monosyllable ending in exactly one
    # vowel plus one consonant other than w/x/y (stop -> stopped, but
    # fail -> failed and visit -> visited).
    if len(word) < 2 or word[-1] in _VOWELS or word[-1] in "wxy":
        return False
    if word[-2] not in _VOWELS:
        return False
    if len(word) >= 3 and word[-3] in _VOWELS:
        return False
    groups = len(re.findall(r"[aeiouy]+", word))
    return groups == 1


def regular_inflections(lemma: str) -> VerbInflections:
    """Inflect ``lemma`` by regular English morphology. Used as the lexicon
    fallback; the result is flagged ``guessed``."""
    if not lemma:
        raise VocabularyError("empty verb lemma")
    if lemma.endswith(("s", "x", "z", "ch", "sh", "o")):
        third = lemma + "es"
    elif lemma.endswith("y") and len(lemma) > 1 and lemma[-2] not in _VOWELS:
        third = lemma[:-1] + "ies"
    else:
        third = lemma + "s"
    if lemma.endswith("e"):
        past = lemma + "d"
    elif lemma.endswith("y") and len(lemma) > 1 and lemma[-2] not in _VOWELS:
        past = lemma[:-1] + "ied"
    elif _ends_cvc(lemma):
        past = lemma + lemma[-1] + "ed"
    else:
        past = lemma + "ed"
    if lemma.endswith("ie"):
        ing = lemma[:-2] + "ying"
    elif lemma.endswith("e") and not lemma.endswith("ee") and lemma != "be":
        ing = lemma[:-1] + "ing"
    elif _ends_cvc(lemma):
        ing = lemma + lemma[-1] + "ing"
    else:
        ing = lemma + "ing"
    return VerbInflections(lemma, third, past, past, ing, guessed=True)


class InflectionLexicon:
    """Verb inflection table loaded from TSV, with reverse lookup.

    File format: ``stem<TAB>present3sg<TAB>past<TAB>past_participle<TAB>
    present_participle``, UTF-8, one verb per line, ``#`` comments.
    """

    def __init__(self, entries: Iterable[VerbInflections] = ()):
        self._by_stem: dict[str, VerbInflections] = {}
        self._reverse: dict[str, list[tuple[str, str]]] = {}
        for entry in entries:
            self.add(entry)

    def add(self, entry: VerbInflections) -> None:
        self._by_stem[entry.stem] = entry
        for tag in VERB_FORMS:
            surface = entry.form(tag)
            hits = self._reverse.setdefault(surface, [])
            if (entry.stem, tag) not in hits:
                hits.append((entry.stem, tag))

    @classmethod
    def from_tsv(cls, path) -> "InflectionLexicon":
        lex = cls()
        with open(path, encoding="utf-8") as handle:
            for line in handle:
                line = line.strip()
                if not line or line.startswith("#"):
                    continue
                fields = line.split("\t")
                if len(fields) != 5:
                    raise FormatError(f"inflection row needs 5 fields, got {len(fields)}: {line!r}")
                lex.add(VerbInflections(*[f.strip().lower() for f in fields]))
        return lex

    def __contains__(self, lemma: str) -> bool:
        return lemma in self._by_stem

    def __len__(self) -> int:
        return len(self._by_stem)

    def lookup(self, lemma: str) -> VerbInflections:
        """Exact lexicon hit, or regular-morphology guess for misses."""
        if not lemma:
            raise VocabularyError("empty verb lemma")
        lemma = lemma.lower()
        hit = self._by_stem.get(lemma)
        if hit is not None:
            return hit
        return regular_inflections(lemma)

    def reverse(self, surface: str) -> list[tuple[str, str]]:
        """All (lemma, form tag) pairs whose inflection equals ``surface``."""
        return list(self._reverse.get(surface.lower(), ()))


def inflect(lemma: str, lexicon: InflectionLexicon) -> VerbInflections:
    """Inflection table for ``lemma``; misses fall back to regular rules."""
    return lexicon.lookup(lemma)


_DEFAULT_LEXICON: Optional[InflectionLexicon] = None


def load_default_lexicon() -> InflectionLexicon:
    """The bundled lexicon of common English verbs (cached)."""
    global _DEFAULT_LEXICON
    if _DEFAULT_LEXICON is None:
        ref = resources.files("roleq").joinpath("data/inflections.tsv")
        with resources.as_file(ref) as path:
            _DEFAULT_LEXICON = InflectionLexicon.from_tsv(path)
    return _DEFAULT_LEXICON


# --------------------------------------------------------------------------
# SlotQuestion

@dataclass(frozen=True)
class SlotQuestion:
    """One question in the seven-slot grammar.

    ``verb_chain_prefix`` holds the non-finite auxiliaries attached to the
    VERB slot (e.g. ``("have", "been")`` in "might have been changed").
    Absent slots are ``None``.
    """

    wh: str
    aux: Optional[str]
    subj: Optional[str]
    verb_lemma: str
    verb_form: str
    verb_chain_prefix: tuple[str, ...] = ()
    obj: Optional[str] = None
    prep: Optional[str] = None
    misc: Optional[str] = None

    def validate(self) -> "SlotQuestion":
        if not self.wh:
            raise FormatError("WH slot is mandatory")
        if self.wh not in WH_WORDS:
            raise VocabularyError(f"unknown wh word {self.wh!r}")
        if not self.verb_lemma:
            raise FormatError("VERB slot is mandatory")
        if self.verb_form not in VERB_FORMS:
            raise VocabularyError(f"unknown verb form {self.verb_form!r}")
        if self.aux is not None and self.aux not in AUX_VOCAB:
            raise VocabularyError(f"unknown auxiliary {self.aux!r}")
        if self.subj is not None and self.subj not in SUBJ_PLACEHOLDERS:
            raise VocabularyError(f"bad SBJ placeholder {self.subj!r}")
        if self.obj is not None and self.obj not in OBJ_PLACEHOLDERS:
            raise VocabularyError(f"bad OBJ placeholder {self.obj!r}")
        if self.prep is not None and self.prep not in PREPOSITIONS:
            raise VocabularyError(f"unknown preposition {self.prep!r}")
        if self.misc is not None and self.misc not in MISC_PLACEHOLDERS:
            raise VocabularyError(f"bad MISC placeholder {self.misc!r}")
        chain_reading(self)  # raises GrammarError on illegal combinations
        if self.subj is not None and self.aux is None:
            raise GrammarError("a question with an overt subject needs a finite auxiliary")
        if self.wh in WH_ARGUMENT and self.subj is not None \
                and self.obj is not None and self.misc is not None:
            raise GrammarError("no open position left for the wh word")
        return self

    @property
    def voice(self) -> str:
        return chain_reading(self)[2]

    @property
    def negated(self) -> bool:
        return self.aux in NEGATED_AUX


def chain_reading(q: SlotQuestion) -> tuple[bool, bool, str]:
    """(perfect, progressive, voice) for the question's aux/verb chain.

    Raises GrammarError when the combination is not in the chain grammar.
    """
    key = (_aux_category(q.aux), tuple(q.verb_chain_prefix), q.verb_form)
    reading = _CHAIN_TABLE.get(key)
    if reading is None:
        raise GrammarError(
            f"illegal aux/verb chain: aux={q.aux!r} prefix={q.verb_chain_prefix!r} "
            f"form={q.verb_form!r}")
    return reading


# --------------------------------------------------------------------------
# Structured-record parsing

_SLOT_KEYS = ("wh", "aux", "subj", "verb", "verb_form", "obj", "prep", "misc")


def parse_slots(record: dict) -> SlotQuestion:
    """Build a SlotQuestion from a structured record.

    ``record`` maps the slot names wh/aux/subj/verb/verb_form/obj/prep/misc
    to strings; empty strings or missing keys mean an absent slot. The
    ``verb_form`` value may carry the auxiliary chain as a prefix, e.g.
    ``"have been past-participle"``.
    """

    def get(key: str) -> Optional[str]:
        value = record.get(key)
        if value is None:
            return None
        value = str(value).strip().lower()
        return value or None

    wh = get("wh")
    verb = get("verb")
    if not wh:
        raise FormatError("record is missing the mandatory WH slot")
    if not verb:
        raise FormatError("record is missing the mandatory VERB slot")
    form_field = get("verb_form") or STEM
    *prefix, form = form_field.split(" ")
    for token in prefix:
        if token not in CHAIN_PREFIX_TOKENS:
            raise VocabularyError(f"bad verb chain token {token!r}")
    q = SlotQuestion(
        wh=wh,
        aux=get("aux"),
        subj=get("subj"),
        verb_lemma=verb,
        verb_form=form,
        verb_chain_prefix=tuple(prefix),
        obj=get("obj"),
        prep=get("prep"),
        misc=get("misc"),
    )
    return q.validate()


def slots_record(q: SlotQuestion) -> dict:
    """Inverse of :func:`parse_slots`: the wire form of a question."""
    form = " ".join(q.verb_chain_prefix + (q.verb_form,))
    return {
        "wh": q.wh,
        "aux": q.aux or "",
        "subj": q.subj or "",
        "verb": q.verb_lemma,
        "verb_form": form,
        "obj": q.obj or "",
        "prep": q.prep or "",
        "misc": q.misc or "",
    }


# --------------------------------------------------------------------------
# Rendering

def render_parts(q: SlotQuestion, lexicon: InflectionLexicon) -> list[tuple[str, str]]:
    """Ordered (slot name, text) pieces of the surface question, without the
    final question mark. Absent slots are omitted."""
    verb = " ".join(q.verb_chain_prefix + (lexicon.lookup(q.verb_lemma).form(q.verb_form),))
    parts = [("wh", q.wh)]
    if q.aux:
        parts.append(("aux", q.aux))
    if q.subj:
        parts.append(("subj", q.subj))
    parts.append(("verb", verb))
    if q.obj:
        parts.append(("obj", q.obj))
    if q.prep:
        parts.append(("prep", q.prep))
    if q.misc:
        parts.append(("misc", q.misc))
    return parts


def render(q: SlotQuestion, lexicon: Optional[InflectionLexicon] = None) -> str:
    """Surface form: space-joined slots, first letter capitalized, "?"."""
    lexicon = lexicon or load_default_lexicon()
    text = " ".join(text for _, text in render_parts(q, lexicon))
    return text[0].upper() + text[1:] + "?"


def render_tokens(q: SlotQuestion, lexicon: Optional[InflectionLexicon] = None) -> str:
    """Lowercase tokenized form with a detached question mark, as used in
    candidate tables and model input strings ("what studies something ?")."""
    lexicon = lexicon or load_default_lexicon()
    return " ".join(text for _, text in render_parts(q, lexicon)) + " ?"


# --------------------------------------------------------------------------
# Surface parsing

def _strip_question_mark(tokens: list[str]) -> list[str]:
    if not tokens:
        return tokens
    if tokens[-1] == "?":
        return tokens[:-1]
    if tokens[-1].endswith("?"):
        return tokens[:-1] + [tokens[-1][:-1]]
    return tokens


def _match_wh(tokens: list[str]) -> Optional[tuple[str, int]]:
    if len(tokens) >= 2 and " ".join(tokens[:2]) in WH_WORDS:
        return " ".join(tokens[:2]), 2
    if tokens and tokens[0] in WH_WORDS:
        return tokens[0], 1
    return None


def parse_surface(text: str, lexicon: Optional[InflectionLexicon] = None) -> SlotQuestion:
    """Parse a rendered question back into slots.

    Only handles questions over the closed vocabulary (placeholder pronouns,
    closed-class words, one verb known to the lexicon); it is the inverse of
    :func:`render` on valid questions.
    """
    lexicon = lexicon or load_default_lexicon()
    tokens = [t.lower() for t in _strip_question_mark(text.split())]
    if not tokens:
        raise ParseError("empty question")
    wh_hit = _match_wh(tokens)
    if wh_hit is None:
        raise ParseError(f"no question word at the start of {text!r}")
    wh, used = wh_hit
    rest = tokens[used:]

    candidates = []
    aux_options = [None]
    if rest and rest[0] in AUX_VOCAB:
        aux_options.insert(0, rest[0])
    for aux in aux_options:
        after_aux = rest[1:] if aux else rest
        subj_options = [None]
        if aux and after_aux and after_aux[0] in SUBJ_PLACEHOLDERS:
            subj_options.insert(0, after_aux[0])
        for subj in subj_options:
            body = after_aux[1:] if subj else after_aux
            candidates.extend(
                _parse_body(wh, aux, subj, body, lexicon))
    if not candidates:
        raise ParseError(f"cannot parse {text!r} in the slot grammar")
    # Canonical preference: obj filled before misc, aux present before absent.
    candidates.sort(key=lambda q: (q.obj is None, q.misc is not None, q.aux is None,
                                   q.verb_lemma, q.verb_form))
    return candidates[0]


def _parse_body(wh, aux, subj, body, lexicon) -> list[SlotQuestion]:
    results = []
    misc_options: list[tuple[Optional[str], int]] = [(None, 0)]
    if len(body) >= 2 and " ".join(body[-2:]) in ("do something", "doing something"):
        misc_options.append((" ".join(body[-2:]), 2))
    if body and body[-1] in MISC_PLACEHOLDERS:
        misc_options.append((body[-1], 1))
    for misc, m_used in misc_options:
        after_misc = body[:len(body) - m_used]
        prep_options: list[tuple[Optional[str], int]] = [(None, 0)]
        if after_misc and after_misc[-1] in PREPOSITIONS:
            prep_options.append((after_misc[-1], 1))
        for prep, p_used in prep_options:
            after_prep = after_misc[:len(after_misc) - p_used]
            obj_options: list[tuple[Optional[str], int]] = [(None, 0)]
            if after_prep and after_prep[-1] in OBJ_PLACEHOLDERS:
                obj_options.append((after_prep[-1], 1))
            for obj, o_used in obj_options:
                chain = after_prep[:len(after_prep) - o_used]
                if not chain:
                    continue
                prefix, head = tuple(chain[:-1]), chain[-1]
                if any(t not in CHAIN_PREFIX_TOKENS for t in prefix):
                    continue
                for lemma, form in lexicon.reverse(head):
                    q = SlotQuestion(wh, aux, subj, lemma, form, prefix, obj, prep, misc)
                    try:
                        q.validate()
                    except (GrammarError, VocabularyError):
                        continue
                    if q not in results:
                        results.append(q)
    return results


# --------------------------------------------------------------------------
# TAMVN signatures

@dataclass(frozen=True)
class TamvnSignature:
    """Tense, aspect, modality, voice, negation and placeholder animacy.

    Animacy is positional: ``animacy_subj`` describes the subject position
    (the SBJ slot when present, otherwise the wh word, since an empty SBJ
    slot means the question extracts the subject); ``animacy_obj`` and
    ``animacy_misc`` describe the OBJ/MISC slots, falling back to the wh
    word for the leftmost empty post-verbal position.
    """

    tense: str = PRESENT
    modal: Optional[str] = None
    negated: bool = False
    perfect: bool = False
    progressive: bool = False
    voice: str = ACTIVE
    animacy_subj: str = NA
    animacy_obj: str = NA
    animacy_misc: str = NA


def _placeholder_animacy(token: Optional[str]) -> str:
    if token == "someone":
        return ANIMATE
    if token == "something":
        return INANIMATE
    return NA


def _wh_animacy(wh: str) -> str:
    if wh == "who":
        return ANIMATE
    if wh == "what":
        return INANIMATE
    return NA


def decompose_tamvn(q: SlotQuestion) -> TamvnSignature:
    """Read the question's finite chain into a TAMVN signature."""
    perfect, progressive, voice = chain_reading(q)
    negated = q.negated
    modal = None
    if q.aux is None:
        tense = PRESENT if q.verb_form == PRESENT3SG else PAST_TENSE
    else:
        positive = NEGATED_AUX.get(q.aux, q.aux)
        tense = _aux_tense(q.aux)
        if positive in MODALS:
            modal = positive
    animacy_subj = _placeholder_animacy(q.subj) if q.subj else _wh_animacy(q.wh)
    animacy_obj = _placeholder_animacy(q.obj)
    animacy_misc = _placeholder_animacy(q.misc) if q.misc in ("someone", "something") else NA
    if q.subj is not None and q.wh in WH_ARGUMENT:
        if q.obj is None:
            animacy_obj = _wh_animacy(q.wh)
        elif q.misc is None:
            animacy_misc = _wh_animacy(q.wh)
    return TamvnSignature(tense, modal, negated, perfect, progressive, voice,
                          animacy_subj, animacy_obj, animacy_misc)


def _finite_aux(sig: TamvnSignature, category: str) -> str:
    forms = {
        "do": {PRESENT: "does", PAST_TENSE: "did"},
        "be": {PRESENT: "is", PAST_TENSE: "was"},
        "have": {PRESENT: "has", PAST_TENSE: "had"},
    }
    if sig.tense == FUTURE:
        raise GrammarError("future tense requires the modal 'will'")
    aux = forms[category][sig.tense]
    if sig.negated:
        return POSITIVE_TO_NEGATED[aux]
    return aux


def _chain_for_signature(sig: TamvnSignature, voice: str, subj_present: bool):
    """(aux, prefix, form) realizing the signature, or GrammarError."""
    modal = sig.modal
    if sig.tense == FUTURE and modal is None:
        modal = "will"
    if modal is not None and modal not in MODALS:
        raise VocabularyError(f"unknown modal {modal!r}")
    if modal is not None:
        aux = POSITIVE_TO_NEGATED.get(modal) if sig.negated else modal
        if aux is None:
            raise GrammarError(f"modal {modal!r} has no negated form in this grammar")
        if voice == PASSIVE:
            if sig.progressive:
                raise GrammarError("progressive passive cannot take a modal or perfect")
            if sig.perfect:
                return aux, ("have", "been"), PAST_PARTICIPLE
            return aux, ("be",), PAST_PARTICIPLE
        if sig.perfect and sig.progressive:
            return aux, ("have", "been"), PRESENT_PARTICIPLE
        if sig.perfect:
            return aux, ("have",), PAST_PARTICIPLE
        if sig.progressive:
            return aux, ("be",), PRESENT_PARTICIPLE
        return aux, (), STEM
    if voice == PASSIVE:
        if sig.perfect and sig.progressive:
            raise GrammarError("perfect progressive passive is outside the chain grammar")
        if sig.perfect:
            return _finite_aux(sig, "have"), ("been",), PAST_PARTICIPLE
        if sig.progressive:
            return _finite_aux(sig, "be"), ("being",), PAST_PARTICIPLE
        return _finite_aux(sig, "be"), (), PAST_PARTICIPLE
    if sig.perfect and sig.progressive:
        return _finite_aux(sig, "have"), ("been",), PRESENT_PARTICIPLE
    if sig.perfect:
        return _finite_aux(sig, "have"), (), PAST_PARTICIPLE
    if sig.progressive:
        return _finite_aux(sig, "be"), (), PRESENT_PARTICIPLE
    # Simple tense: do-support with an overt subject or under negation,
    # otherwise the verb itself is finite.
    if subj_present or sig.negated:
        return _finite_aux(sig, "do"), (), STEM
    return None, (), PRESENT3SG if sig.tense == PRESENT else PAST


def _apply_animacy(wh, subj, obj, misc, sig: TamvnSignature):
    def pick(current, animacy):
        if current not in ("someone", "something") or animacy == NA:
            return current
        return "someone" if animacy == ANIMATE else "something"

    subj = pick(subj, sig.animacy_subj)
    obj = pick(obj, sig.animacy_obj)
    misc = pick(misc, sig.animacy_misc)
    if wh in WH_ARGUMENT:
        if subj is None:
            gap_animacy = sig.animacy_subj
        elif obj is None:
            gap_animacy = sig.animacy_obj
        else:
            gap_animacy = sig.animacy_misc if misc is None else NA
        if gap_animacy == ANIMATE:
            wh = "who"
        elif gap_animacy == INANIMATE:
            wh = "what"
    return wh, subj, obj, misc


def apply_tamvn(q: SlotQuestion, sig: TamvnSignature,
                lexicon: Optional[InflectionLexicon] = None) -> SlotQuestion:
    """Re-impose a TAMVN signature on a question.

    The question's role-bearing structure (wh category, voice, preposition,
    placeholder positions) is kept; only the finite chain and placeholder
    animacy change. ``apply_tamvn(q, decompose_tamvn(q))`` is the identity.
    """
    voice = q.voice  # voice is role-bearing: the question's own voice wins
    aux, prefix, form = _chain_for_signature(sig, voice, q.subj is not None)
    wh, subj, obj, misc = _apply_animacy(q.wh, q.subj, q.obj, q.misc, sig)
    out = replace(q, wh=wh, aux=aux, subj=subj, verb_form=form,
                  verb_chain_prefix=prefix, obj=obj, misc=misc)
    return out.validate()


PROTOTYPE_SIGNATURE = TamvnSignature(
    tense=PRESENT, modal=None, negated=False, perfect=False, progressive=False,
    animacy_subj=INANIMATE, animacy_obj=INANIMATE, animacy_misc=INANIMATE)
