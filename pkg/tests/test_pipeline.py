import sys
from pathlib import Path

import pytest

from roleq.errors import BackendError, ProtocolError
from roleq.grammar import TamvnSignature, parse_surface
from roleq.pipeline import (
    BackendChooser,
    BackendQaOracle,
    ProcessBackend,
    RoleQuestionRequest,
    contextualize,
    detect_tamvn,
    generate_role_questions,
    lookup_prototype,
    lookup_prototype_entry,
    rule_based_contextualize,
)
from roleq.prototypes import to_prototype
from roleq.selection import LexiconEntry, RoleLexicon

STUB = str(Path(__file__).with_name("stub_backend.py"))


def stub_command(mode="echo"):
    return [sys.executable, STUB, mode]


def _lexicon_with(*entries):
    lexicon = RoleLexicon()
    for lemma, sense, role, proto in entries:
        lexicon.add(LexiconEntry(lemma, sense, role, proto, None, 0))
    return lexicon


# --------------------------------------------------------------------------
# lookup

def test_lookup_exact_hit():
    lexicon = _lexicon_with(("bring", "01", "A2", "where does something bring something ?"))
    entry = lookup_prototype_entry(lexicon, "bring", "01", "A2")
    assert entry.prototype == "where does something bring something ?"


def test_lookup_falls_back_to_other_sense():
    lexicon = _lexicon_with(("win", "02", "A1", "what does something win ?"))
    assert lookup_prototype_entry(lexicon, "win", "01", "A1").sense == "02"


def test_lookup_adjunct_wildcards():
    lexicon = _lexicon_with(("*", "*", "AM-LOC", "where does something happen ?"))
    assert lookup_prototype_entry(lexicon, "zzz", "01", "AM-LOC") is not None
    assert lookup_prototype_entry(lexicon, "zzz", "01", "A0") is None


def test_lookup_missing_is_none():
    assert lookup_prototype(_lexicon_with(), "unknown", "01", "A0") is None


def test_lookup_parses_prototype(lexicon):
    rolelex = _lexicon_with(("change", "01", "A0", "what changes something ?"))
    q = lookup_prototype(rolelex, "change", "01", "A0", lexicon)
    assert q == parse_surface("What changes something?", lexicon)


# --------------------------------------------------------------------------
# surface TAMVN detection

def test_detect_future_will(lexicon):
    tokens = tuple("The tourists will arrive in Mexico at noon .".split())
    sig = detect_tamvn(tokens, 3, "arrive", lexicon)
    assert sig.tense == "future" and sig.modal == "will"


def test_detect_modal_perfect_contraction(lexicon):
    tokens = tuple("The only thing that might've changed their minds".split())
    sig = detect_tamvn(tokens, 5, "change", lexicon)
    assert sig.modal == "might" and sig.perfect


def test_detect_simple_past_vs_participle(lexicon):
    past = detect_tamvn(tuple("The crew fixed the engine .".split()), 2, "fix", lexicon)
    assert past.tense == "past" and not past.perfect
    perfect = detect_tamvn(tuple("The crew has fixed the engine .".split()), 3, "fix", lexicon)
    assert perfect.tense == "present" and perfect.perfect
    passive = detect_tamvn(tuple("The engine was fixed yesterday .".split()), 3, "fix", lexicon)
    assert passive.tense == "past" and not passive.perfect


def test_detect_negation(lexicon):
    sig = detect_tamvn(tuple("They will not fix the pipes .".split()), 3, "fix", lexicon)
    assert sig.negated and sig.tense == "future"


def test_detect_progressive(lexicon):
    sig = detect_tamvn(tuple("The choir is singing tonight .".split()), 3, "sing", lexicon)
    assert sig.progressive and sig.tense == "present"


# --------------------------------------------------------------------------
# contextualization, rule-based path

def test_fallback_reproduces_modal_perfect_passive(lexicon):
    tokens = tuple("The only thing that might've changed their minds this "
                   "quickly I think is money".split())
    request = RoleQuestionRequest(tokens=tokens, predicate_index=5, lemma="change")
    prototype = parse_surface("What is changed?", lexicon)
    out = contextualize(prototype, request)
    assert out.text == "What might have been changed?"
    assert not out.used_backend


def test_fallback_identity_for_present_tense(lexicon):
    tokens = tuple("Workers fix pipes .".split())
    request = RoleQuestionRequest(tokens=tokens, predicate_index=1, lemma="fix")
    prototype = parse_surface("what fixes something ?", lexicon)
    assert contextualize(prototype, request).text == "What fixes something?"


def test_fallback_preserves_prototype_structure(lexicon, mini_gold):
    rolelex_protos = ["what does something win ?", "where does something win ?",
                      "what is fixed ?", "what brings something ?"]
    for instance in mini_gold[:20]:
        for proto_text in rolelex_protos:
            prototype = parse_surface(proto_text, lexicon)
            request = RoleQuestionRequest(
                tokens=instance.tokens, predicate_index=instance.predicate_index,
                lemma=instance.lemma, sense=instance.sense)
            text = rule_based_contextualize(prototype, request, lexicon)
            assert to_prototype(parse_surface(text, lexicon), lexicon) == \
                to_prototype(prototype, lexicon)


def test_fallback_fills_and_agreement(lexicon):
    tokens = tuple("Air molecules bump into things .".split())
    request = RoleQuestionRequest(tokens=tokens, predicate_index=2, lemma="bump",
                                  fills={"subj": (0, 2)})
    prototype = parse_surface("what does something bump into ?", lexicon)
    assert contextualize(prototype, request).text == "What do air molecules bump into?"


def test_hint_signature_overrides_detection(lexicon):
    tokens = tuple("Workers fix pipes .".split())
    request = RoleQuestionRequest(
        tokens=tokens, predicate_index=1, lemma="fix",
        tamvn=TamvnSignature(tense="future", negated=True))
    prototype = parse_surface("what is fixed ?", lexicon)
    assert contextualize(prototype, request).text == "What won't be fixed?"


# --------------------------------------------------------------------------
# contextualization over the backend

def test_backend_contextualize_roundtrip(lexicon):
    tokens = tuple("Some geologists study the Moon .".split())
    request = RoleQuestionRequest(tokens=tokens, predicate_index=2, lemma="study")
    prototype = parse_surface("what studies something ?", lexicon)
    with ProcessBackend(stub_command()) as backend:
        out = contextualize(prototype, request, backend)
    assert out.used_backend
    assert out.text == "What studies something?"


def test_backend_invalid_output_is_error(lexicon):
    tokens = tuple("Some geologists study the Moon .".split())
    request = RoleQuestionRequest(tokens=tokens, predicate_index=2, lemma="study")
    prototype = parse_surface("what studies something ?", lexicon)
    with ProcessBackend(stub_command("no-mark")) as backend:
        with pytest.raises(BackendError):
            contextualize(prototype, request, backend)


def test_backend_failure_falls_back_with_warning(lexicon):
    tokens = tuple("Workers fix pipes .".split())
    request = RoleQuestionRequest(tokens=tokens, predicate_index=1, lemma="fix")
    prototype = parse_surface("what fixes something ?", lexicon)
    with ProcessBackend(stub_command("silent"), timeout=0.5) as backend:
        out = contextualize(prototype, request, backend)
    assert out.text == "What fixes something?"
    assert not out.used_backend and out.warning


# --------------------------------------------------------------------------
# wire protocol

def test_backend_call_mlm_choice_shape():
    with ProcessBackend(stub_command()) as backend:
        payload = backend.call("mlm_choice", {
            "text": "What [MASK] air molecules bump into?",
            "options": ["do", "does"]})
    assert payload == {"choice": "do"}


def test_backend_call_qa_shape():
    with ProcessBackend(stub_command()) as backend:
        payload = backend.call("qa", {"question": "Who won?",
                                      "passage": "The team won .",
                                      "gold": "The team"})
        assert payload["answer"] == "The team"
        payload = backend.call("qa", {"question": "Who won?", "passage": "x"})
        assert payload["answer"] is None


def test_backend_id_mismatch_is_protocol_error():
    with ProcessBackend(stub_command("bad-id")) as backend:
        with pytest.raises(ProtocolError):
            backend.call("qa", {"question": "q", "passage": "p"})


def test_backend_garbage_is_protocol_error():
    with ProcessBackend(stub_command("garbage")) as backend:
        with pytest.raises(ProtocolError):
            backend.call("qa", {"question": "q", "passage": "p"})


def test_backend_timeout():
    with ProcessBackend(stub_command("silent"), timeout=0.3) as backend:
        with pytest.raises(BackendError):
            backend.call("qa", {"question": "q", "passage": "p"})


def test_backend_ids_increment_and_match():
    with ProcessBackend(stub_command()) as backend:
        for _ in range(5):
            backend.call("qa", {"gold": "x", "question": "q", "passage": "p"})


def test_backend_adapters():
    with ProcessBackend(stub_command()) as backend:
        oracle = BackendQaOracle(backend)
        assert oracle.answer("q", "p") is None
        chooser = BackendChooser(backend)
        assert chooser("What [MASK] things do?", ["do", "does"], "things") == "do"


# --------------------------------------------------------------------------
# batch generation

def _arrive_setup():
    lexicon = _lexicon_with(
        ("arrive", "01", "A1", "what arrives ?"),
        ("arrive", "01", "A4", "where does something arrive ?"),
        ("arrive", "01", "A3", "where does something arrive from ?"),
        ("arrive", "*", "AM-MNR", "how does something arrive ?"),
        ("*", "*", "AM-CAU", "why does something arrive ?"),
        ("*", "*", "AM-TMP", "when does something arrive ?"),
    )
    tokens = tuple("The tourists will arrive in Mexico at noon .".split())
    request = RoleQuestionRequest(tokens=tokens, predicate_index=3,
                                  lemma="arrive", sense="01",
                                  fills={"subj": (0, 2)})
    return lexicon, request


def test_generate_one_question_per_role():
    lexicon, request = _arrive_setup()
    result = generate_role_questions(
        request, lexicon, ["A1", "A4", "A3"], ("AM-MNR", "AM-CAU", "AM-TMP"))
    assert set(result.questions) == {"A1", "A4", "A3", "AM-MNR", "AM-CAU", "AM-TMP"}
    assert result.questions["AM-CAU"] == "Why will the tourists arrive?"
    assert not result.duplicates and not result.missing


def test_generate_reports_missing_roles():
    lexicon, request = _arrive_setup()
    result = generate_role_questions(request, lexicon, ["A1", "A5"], ())
    assert result.missing == ["A5"]
    assert "A1" in result.questions


def test_generate_empty_lexicon_reports_all_missing():
    _, request = _arrive_setup()
    result = generate_role_questions(request, RoleLexicon(), ["A0", "A1"], ())
    assert result.questions == {}
    assert result.missing == ["A0", "A1"]


def test_generate_reports_duplicates():
    lexicon = _lexicon_with(
        ("give", "01", "A0", "what gives something ?"),
        ("give", "01", "A2", "what gives something ?"),
    )
    tokens = tuple("She gave the key back .".split())
    request = RoleQuestionRequest(tokens=tokens, predicate_index=1,
                                  lemma="give", sense="01")
    result = generate_role_questions(request, lexicon, ["A0", "A2"], ())
    assert result.duplicates == [("A0", "A2")]
