"""Primary pipeline driving the reference backend in mock mode."""

import importlib.util
import sys

import pytest

from roleq.framealign import build_frame_aligned, frame_from_dict
from roleq.grammar import parse_surface
from roleq.pipeline import (
    BackendChooser,
    BackendQaOracle,
    ProcessBackend,
    RoleQuestionRequest,
    contextualize,
)

pytestmark = pytest.mark.skipif(importlib.util.find_spec("refbackend") is None,
                                reason="reference backend not installed")

BACKEND_CMD = [sys.executable, "-m", "refbackend", "--mode", "mock"]


def test_contextualize_over_mock_backend(lexicon):
    tokens = tuple("The tourists will arrive in Mexico at noon .".split())
    request = RoleQuestionRequest(tokens=tokens, predicate_index=3, lemma="arrive")
    prototype = parse_surface("where does something arrive ?", lexicon)
    with ProcessBackend(BACKEND_CMD) as backend:
        out = contextualize(prototype, request, backend)
    assert out.used_backend
    assert out.text == "Where will something arrive?"


def test_agreement_chooser_over_mock_backend():
    frame = frame_from_dict({
        "sentence_id": "waves",
        "tokens": ["Heavy", "waves", "crash", "against", "the", "sea", "wall", "."],
        "predicate": {"index": 2, "lemma": "crash"},
        "entries": [
            {"slots": {"wh": "what", "verb": "crash", "verb_form": "present3sg",
                       "prep": "against", "misc": "something"},
             "answers": [{"start": 0, "end": 2}]},
            {"slots": {"wh": "what", "aux": "does", "subj": "something",
                       "verb": "crash", "verb_form": "stem", "prep": "against"},
             "answers": [{"start": 4, "end": 7}]},
        ],
    })
    with ProcessBackend(BACKEND_CMD) as backend:
        aligned = build_frame_aligned(frame, chooser=BackendChooser(backend))
    assert aligned.entries[1].contextualized == "What do heavy waves crash against?"


def test_qa_oracle_over_mock_backend():
    with ProcessBackend(BACKEND_CMD) as backend:
        oracle = BackendQaOracle(backend)
        assert oracle.answer("Who won?", "The team won .") == "The"
