"""Deterministic mock handlers.

No model weights and no heavy imports: answers are fixed rules so that
protocol tests and corpus builds are reproducible anywhere.
"""

from __future__ import annotations

from roleq.framealign import seq2seq_input  # noqa: F401  (format reference)
from roleq.grammar import load_default_lexicon, parse_surface
from roleq.pipeline import RoleQuestionRequest, rule_based_contextualize

# Finite auxiliaries by number, for picking the plural/singular option.
_PLURAL_FORMS = {"do", "are", "were", "have", "don't", "aren't", "weren't", "haven't"}
_SINGULAR_FORMS = {"does", "is", "was", "has", "doesn't", "isn't", "wasn't", "hasn't"}


def answer_qa(payload: dict) -> dict:
    """Echo the gold span when the payload carries one; otherwise fall back
    to the fixed rule of returning the passage's first token."""
    if "gold" in payload:
        return {"answer": payload["gold"]}
    passage = str(payload.get("passage", "")).split()
    return {"answer": passage[0] if passage else None}


def _subject_looks_plural(text: str) -> bool:
    # The subject follows the masked auxiliary; inspect its first two
    # tokens and call it plural iff one of them ends in "s".
    try:
        after = text.split("[MASK]", 1)[1].split()
    except IndexError:
        return False
    head = [token.rstrip("?.,") for token in after[:2]]
    return any(token.endswith("s") for token in head)


def choose_masked(payload: dict) -> dict:
    """Pick the plural option iff the subject after [MASK] ends in "s"."""
    options = list(payload.get("options", ()))
    if not options:
        raise ValueError("mlm_choice needs a non-empty options list")
    plural = next((o for o in options if o in _PLURAL_FORMS), options[0])
    singular = next((o for o in options if o in _SINGULAR_FORMS), options[-1])
    text = str(payload.get("text", ""))
    return {"choice": plural if _subject_looks_plural(text) else singular}


def contextualize(payload: dict) -> dict:
    """Apply the toolkit's rule-based contextualizer to the standard
    sequence-to-sequence input format."""
    source = str(payload["input"])
    passage, _, tail = source.partition(" </s> ")
    lemma, _, prototype = tail.partition(" [SEP] ")
    tokens = []
    index = None
    for token in passage.split():
        if token == "PREDICATE-START":
            index = len(tokens)
        elif token != "PREDICATE-END":
            tokens.append(token)
    if index is None:
        raise ValueError("input carries no predicate markers")
    lexicon = load_default_lexicon()
    request = RoleQuestionRequest(tokens=tuple(tokens), predicate_index=index,
                                  lemma=lemma.strip().lower())
    question = rule_based_contextualize(
        parse_surface(prototype.strip(), lexicon), request, lexicon)
    return {"question": question}


HANDLERS = {
    "qa": answer_qa,
    "mlm_choice": choose_masked,
    "contextualize": contextualize,
}
