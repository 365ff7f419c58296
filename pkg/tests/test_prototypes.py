import pytest

from roleq.errors import AlignmentError
from roleq.framealign import Frame, FrameEntry
from roleq.grammar import decompose_tamvn, parse_surface, render
from roleq.prototypes import (
    CandidateTable,
    SrlArguments,
    aggregate_candidates,
    align_qa_to_srl,
    prototype_text,
    read_candidates_tsv,
    span_iou,
    to_prototype,
    write_candidates_tsv,
)


# --------------------------------------------------------------------------
# to_prototype

def test_prototype_strips_negated_future(lexicon):
    q = parse_surface("What won't be fixed?", lexicon)
    assert render(to_prototype(q, lexicon), lexicon) == "What is fixed?"


def test_prototype_strips_modality_and_animacy(lexicon):
    # Empty SBJ slot takes the bare present-3sg case; who/someone become
    # what/something.
    q = parse_surface("Who might bring something to someone?", lexicon)
    assert render(to_prototype(q, lexicon), lexicon) == \
        "What brings something to something?"


def test_prototype_fixpoint(lexicon):
    q = parse_surface("What is fixed?", lexicon)
    assert to_prototype(q, lexicon) == q


def test_prototype_overt_subject_takes_does(lexicon):
    q = parse_surface("What did someone win at?", lexicon)
    assert render(to_prototype(q, lexicon), lexicon) == \
        "What does something win at?"


def test_prototype_idempotent_on_corpus(lexicon, mini_questions):
    for q in mini_questions:
        proto = to_prototype(q, lexicon)
        assert to_prototype(proto, lexicon) == proto


def test_prototype_normal_form_on_corpus(lexicon, mini_questions):
    for q in mini_questions:
        proto = to_prototype(q, lexicon)
        sig = decompose_tamvn(proto)
        assert sig.tense == "present" and sig.modal is None
        assert not sig.negated and not sig.perfect and not sig.progressive
        assert sig.voice == decompose_tamvn(q).voice
        assert proto.prep == q.prep
        original_wh = "what" if q.wh in ("who", "what") else q.wh
        assert proto.wh == original_wh
        assert proto.misc in (q.misc, "something")


# --------------------------------------------------------------------------
# span alignment

def _one_question_frame(span):
    q = parse_surface("What is fixed?")
    return Frame("s1", tuple("The pipes were fixed quickly .".split()),
                 3, "fix", "01", (FrameEntry(q, (span,)),))


def test_align_identical_spans():
    frame = _one_question_frame((0, 2))
    records = align_qa_to_srl(frame, SrlArguments(3, (("A1", 0, 2),)))
    assert len(records) == 1 and records[0].role == "A1"
    assert not records[0].ambiguous


def test_align_low_iou_not_aligned():
    # |intersection| = 1, |union| = 4 -> 0.25 < 0.4
    frame = _one_question_frame((0, 2))
    records = align_qa_to_srl(frame, SrlArguments(3, (("A1", 1, 4),)))
    assert records == []


def test_align_iou_two_thirds_aligned():
    # |intersection| = 2, |union| = 3 -> 2/3 >= 0.4
    frame = _one_question_frame((0, 3))
    records = align_qa_to_srl(frame, SrlArguments(3, (("A1", 1, 3),)))
    assert len(records) == 1


def test_align_highest_iou_wins_ties_go_earlier():
    frame = _one_question_frame((1, 3))
    records = align_qa_to_srl(frame, SrlArguments(3, (("A0", 0, 3), ("A1", 1, 4))))
    # both arguments overlap the answer by two tokens over a union of three
    assert len(records) == 1
    assert records[0].role == "A0" and records[0].ambiguous


def test_align_predicate_mismatch_raises():
    frame = _one_question_frame((0, 2))
    with pytest.raises(AlignmentError):
        align_qa_to_srl(frame, SrlArguments(1, (("A1", 0, 2),)))


def test_align_monotone_in_threshold():
    frame = _one_question_frame((0, 3))
    args = SrlArguments(3, (("A1", 1, 3), ("A0", 0, 1)))
    sizes = [len(align_qa_to_srl(frame, args, threshold=t))
             for t in (0.1, 0.4, 0.7, 1.0)]
    assert sizes == sorted(sizes, reverse=True)


def test_span_iou_examples():
    assert span_iou((0, 2), (0, 2)) == 1.0
    assert span_iou((0, 2), (2, 4)) == 0.0
    assert span_iou((0, 3), (1, 3)) == pytest.approx(2 / 3)


# --------------------------------------------------------------------------
# aggregation

def _record(lemma, sense, role, text, lexicon):
    from roleq.prototypes import JointRecord
    return JointRecord("s", lemma, sense, role, parse_surface(text, lexicon), (0, 1))


def test_aggregate_counts_per_lemma_role(lexicon):
    records = [_record("fix", "01", "A1", "What is fixed?", lexicon)] * 2
    table = aggregate_candidates(records, lexicon)
    assert table.candidates("fix", "A1") == {"what is fixed ?": 2}


def test_aggregate_merges_senses(lexicon):
    records = [_record("win", "01", "AM-LOC", "Where does something win?", lexicon),
               _record("win", "02", "AM-LOC", "Where does something win?", lexicon)]
    table = aggregate_candidates(records, lexicon)
    assert table.candidates("win", "AM-LOC")["where does something win ?"] == 2


def test_aggregate_pools_adjuncts_globally(lexicon):
    records = [_record("win", "01", "AM-LOC", "Where does something win?", lexicon),
               _record("put", "01", "AM-LOC", "Where does someone put something?", lexicon)]
    table = aggregate_candidates(records, lexicon)
    pooled = table.candidates("*", "AM-LOC")
    assert sum(pooled.values()) == 2
    assert "where does something put something ?" in pooled


def test_aggregate_bring_destination(lexicon):
    records = [_record("bring", "01", "A2", "Where did someone bring something?", lexicon)]
    table = aggregate_candidates(records, lexicon)
    assert "where does something bring something ?" in table.candidates("bring", "A2")


def test_candidates_tsv_round_trip(tmp_path, lexicon):
    table = CandidateTable()
    table.add("fix", "A1", "what is fixed ?", 3)
    table.add("win", "AM-LOC", "where does something win ?", 2)
    path = tmp_path / "cand.tsv"
    write_candidates_tsv(table, path)
    back = read_candidates_tsv(path)
    assert back.candidates("fix", "A1") == table.candidates("fix", "A1")
    assert back.candidates("*", "AM-LOC") == table.candidates("*", "AM-LOC")


def test_prototype_text_is_parseable_normal_form(lexicon, mini_questions):
    for q in mini_questions[:100]:
        text = prototype_text(q, lexicon)
        assert parse_surface(text, lexicon) == to_prototype(q, lexicon)
