import io
import json
import subprocess
import sys

import pytest

from refbackend.mock import answer_qa, choose_masked, contextualize
from refbackend.server import BackendConfig, serve


# --------------------------------------------------------------------------
# mock handlers

def test_qa_echoes_gold():
    assert answer_qa({"gold": "The team", "question": "q", "passage": "p"}) == \
        {"answer": "The team"}


def test_qa_fixed_rule_without_gold():
    assert answer_qa({"question": "q", "passage": "The team won ."}) == \
        {"answer": "The"}
    assert answer_qa({"question": "q", "passage": ""}) == {"answer": None}


def test_mlm_plural_subject():
    payload = {"text": "What [MASK] air molecules bump into?",
               "options": ["do", "does"]}
    assert choose_masked(payload) == {"choice": "do"}


def test_mlm_singular_subject():
    payload = {"text": "What [MASK] the plane carry?", "options": ["do", "does"]}
    assert choose_masked(payload) == {"choice": "does"}


def test_mlm_option_order_does_not_matter():
    payload = {"text": "What [MASK] air molecules bump into?",
               "options": ["does", "do"]}
    assert choose_masked(payload) == {"choice": "do"}


def test_contextualize_applies_fallback_rules():
    source = ("The only thing that might've PREDICATE-START changed "
              "PREDICATE-END their minds this quickly I think is money "
              "</s> change [SEP] what is changed ?")
    assert contextualize({"input": source}) == \
        {"question": "What might have been changed?"}


def test_contextualize_reads_past_tense():
    source = ("The crew PREDICATE-START fixed PREDICATE-END the engine . "
              "</s> fix [SEP] what is fixed ?")
    assert contextualize({"input": source}) == {"question": "What was fixed?"}


def test_contextualize_present_is_identity():
    source = ("Some geologists PREDICATE-START study PREDICATE-END the Moon . "
              "</s> study [SEP] what studies something ?")
    assert contextualize({"input": source}) == {"question": "What studies something?"}


def test_contextualize_requires_markers():
    with pytest.raises(ValueError):
        contextualize({"input": "no markers here </s> fix [SEP] what is fixed ?"})


# --------------------------------------------------------------------------
# serve loop

def run_serve(lines):
    stdin = io.StringIO("".join(line + "\n" for line in lines))
    stdout = io.StringIO()
    serve(BackendConfig(mode="mock"), stdin=stdin, stdout=stdout)
    return [json.loads(line) for line in stdout.getvalue().splitlines()]


def test_serve_answers_in_request_order():
    requests = [
        {"id": 1, "type": "qa", "payload": {"gold": "x", "question": "q", "passage": "p"}},
        {"id": 2, "type": "mlm_choice",
         "payload": {"text": "What [MASK] dogs chase?", "options": ["do", "does"]}},
        {"id": 3, "type": "qa", "payload": {"question": "q", "passage": "a b"}},
    ]
    responses = run_serve([json.dumps(r) for r in requests])
    assert [r["id"] for r in responses] == [1, 2, 3]
    assert responses[0]["payload"] == {"answer": "x"}
    assert responses[1]["payload"] == {"choice": "do"}


def test_serve_malformed_line_keeps_going():
    requests = [
        json.dumps({"id": 1, "type": "qa", "payload": {"gold": "a", "question": "q",
                                                       "passage": "p"}}),
        "{broken json",
        json.dumps({"id": 2, "type": "qa", "payload": {"gold": "b", "question": "q",
                                                       "passage": "p"}}),
    ]
    responses = run_serve(requests)
    assert len(responses) == 3
    assert responses[0]["id"] == 1
    assert responses[1]["id"] is None and "error" in responses[1]
    assert responses[2]["id"] == 2 and responses[2]["payload"] == {"answer": "b"}


def test_serve_unknown_type_is_error_envelope():
    responses = run_serve([json.dumps({"id": 9, "type": "mystery", "payload": {}})])
    assert responses == [{"id": 9, "error": "unknown request type 'mystery'"}]


def test_serve_handler_failure_is_error_envelope():
    responses = run_serve([
        json.dumps({"id": 4, "type": "mlm_choice", "payload": {"options": []}}),
        json.dumps({"id": 5, "type": "qa", "payload": {"gold": "ok", "question": "q",
                                                       "passage": "p"}}),
    ])
    assert "error" in responses[0] and responses[0]["id"] == 4
    assert responses[1]["payload"] == {"answer": "ok"}


def test_mode_validation():
    with pytest.raises(ValueError):
        BackendConfig(mode="quantum")


# --------------------------------------------------------------------------
# as a child process

def test_subprocess_round_trip():
    process = subprocess.Popen([sys.executable, "-m", "refbackend", "--mode", "mock"],
                               stdin=subprocess.PIPE, stdout=subprocess.PIPE,
                               text=True, bufsize=1)
    try:
        for i in range(1, 6):
            request = {"id": i, "type": "qa",
                       "payload": {"gold": f"g{i}", "question": "q", "passage": "p"}}
            process.stdin.write(json.dumps(request) + "\n")
            process.stdin.flush()
            response = json.loads(process.stdout.readline())
            assert response["id"] == i and response["payload"]["answer"] == f"g{i}"
    finally:
        process.stdin.close()
        process.wait(timeout=5)
