import json

import pytest

from roleq.errors import DataError
from roleq.framealign import (
    PLURAL_OF_AUX,
    aligned_to_dict,
    build_frame_aligned,
    build_seq2seq_example,
    decapitalize,
    fill_question,
    fix_agreement,
    frame_from_dict,
    heuristic_chooser,
    plural_heuristic,
    read_frames_jsonl,
    seq2seq_input,
)
from roleq.grammar import parse_surface, render
from roleq.prototypes import to_prototype


def molecules_frame():
    return frame_from_dict({
        "sentence_id": "molecules",
        "tokens": ["Air", "molecules", "move", "a", "lot", "and",
                   "bump", "into", "things", "."],
        "predicate": {"index": 6, "lemma": "bump"},
        "entries": [
            {"slots": {"wh": "what", "aux": "", "subj": "", "verb": "bump",
                       "verb_form": "present3sg", "obj": "", "prep": "into",
                       "misc": "something"},
             "answers": [{"start": 0, "end": 2}]},
            {"slots": {"wh": "what", "aux": "does", "subj": "something",
                       "verb": "bump", "verb_form": "stem", "obj": "",
                       "prep": "into", "misc": ""},
             "answers": [{"start": 8, "end": 9}]},
        ],
    })


# --------------------------------------------------------------------------
# end-to-end frame alignment

def test_two_question_frame_end_to_end():
    aligned = build_frame_aligned(molecules_frame())
    texts = [e.contextualized for e in aligned.entries]
    assert texts == ["What bumps into things?", "What do air molecules bump into?"]
    assert aligned.entries[0].fills["misc"].text == "things"
    assert aligned.entries[1].fills["subj"].text == "Air molecules"


def test_single_question_frame_has_no_fills():
    frame = frame_from_dict({
        "sentence_id": "one", "tokens": ["The", "pipes", "burst", "."],
        "predicate": {"index": 2, "lemma": "burst"},
        "entries": [{"slots": {"wh": "what", "verb": "burst", "verb_form": "past"},
                     "answers": [{"start": 0, "end": 2}]}],
    })
    aligned = build_frame_aligned(frame)
    assert aligned.filled_base == 0 and aligned.filled_with_extras == 0
    assert aligned.entries[0].contextualized == "What burst?"


def test_passive_active_pair_needs_extras(lexicon):
    frame = frame_from_dict({
        "sentence_id": "pair", "tokens": ["The", "clerk", "shelved", "the", "books", "."],
        "predicate": {"index": 2, "lemma": "shelve"},
        "entries": [
            {"slots": {"wh": "who", "verb": "shelve", "verb_form": "past",
                       "obj": "something"}, "answers": [{"start": 0, "end": 2}]},
            {"slots": {"wh": "what", "aux": "was", "verb": "shelve",
                       "verb_form": "past-participle"},
             "answers": [{"start": 3, "end": 5}]},
        ],
    })
    base = build_frame_aligned(frame, extras=False)
    extras = build_frame_aligned(frame, extras=True)
    assert base.filled_base == 0
    assert not base.entries[0].fills
    assert extras.entries[0].fills["obj"].rule == "obj-passive-subj"
    assert extras.entries[0].contextualized == "Who shelved the books?"


def test_monotone_coverage_on_corpus(mini_frames):
    total_base = total_extras = 0
    for frame in mini_frames:
        aligned = build_frame_aligned(frame)
        assert aligned.filled_with_extras >= aligned.filled_base
        total_base += aligned.filled_base
        total_extras += aligned.filled_with_extras
    assert total_extras > total_base


def test_provenance_covers_every_fill(mini_frames):
    for frame in mini_frames:
        aligned = build_frame_aligned(frame)
        for entry in aligned.entries:
            for slot, fill in entry.fills.items():
                assert fill.slot == slot
                assert 0 <= fill.source_entry < len(frame.entries)
                assert fill.source_entry != aligned.entries.index(entry)
                assert fill.rule in ("base", "obj-passive-subj", "subj-by-pp",
                                     "loc-where", "strip-misc")
                assert frame.span_text(fill.span) == fill.text


def test_role_preservation_under_fills(lexicon, mini_frames):
    # Undoing the substitutions (and the agreement repair) recovers a
    # question with the same prototype as the original.
    for frame in mini_frames:
        aligned = build_frame_aligned(frame)
        for entry in aligned.entries:
            text = entry.contextualized
            for slot, fill in entry.fills.items():
                placeholder = getattr(entry.question, slot if slot != "subj" else "subj")
                substituted = decapitalize(fill.text, fill.span, frame.tokens)
                assert substituted in text
                text = text.replace(substituted, placeholder)
            tokens = text.split()
            aux_index = 2 if tokens[0].lower() == "how" and len(tokens) > 1 \
                and tokens[1] in ("much", "long") else 1
            if aux_index < len(tokens):
                bare = tokens[aux_index].rstrip("?")
                if bare in PLURAL_OF_AUX.values():
                    singular = [s for s, p in PLURAL_OF_AUX.items() if p == bare][0]
                    tokens[aux_index] = tokens[aux_index].replace(bare, singular)
            undone = parse_surface(" ".join(tokens), lexicon)
            assert to_prototype(undone, lexicon) == \
                to_prototype(entry.question, lexicon)


def test_shortest_span_wins(mini_frames):
    feed = [f for f in mini_frames if f.predicate_lemma == "feed"][0]
    aligned = build_frame_aligned(feed)
    entry = aligned.entries[1]  # "What did someone feed?"
    assert entry.fills["subj"].text == "farmer"


def test_excluded_passives_are_logged(mini_frames):
    sold = [f for f in mini_frames if f.predicate_lemma in ("sell", "exchange")]
    assert sold
    for frame in sold:
        aligned = build_frame_aligned(frame)
        assert aligned.excluded
        assert "subj" not in aligned.entries[1].fills


# --------------------------------------------------------------------------
# fill_question / decapitalize / fix_agreement

def test_fill_question_identity_without_fills(lexicon):
    q = parse_surface("What bumps into something?", lexicon)
    assert fill_question(q, {}, ()) == "What bumps into something?"


def test_decapitalize_sentence_initial():
    assert decapitalize("Air molecules", (0, 2), ()) == "air molecules"


def test_decapitalize_keeps_acronyms():
    assert decapitalize("NASA engineers", (0, 2), ()) == "NASA engineers"


def test_decapitalize_keeps_capitalized_second_word():
    assert decapitalize("The Pentagon", (0, 2), ()) == "The Pentagon"


def test_decapitalize_only_at_sentence_start():
    assert decapitalize("The tourists", (3, 5), ()) == "The tourists"


def test_decapitalize_single_word():
    assert decapitalize("Dogs", (0, 1), ()) == "dogs"
    assert decapitalize("NASA", (0, 1), ()) == "NASA"


def test_fix_agreement_plural_subject():
    out = fix_agreement("What does air molecules bump into?", "air molecules")
    assert out == "What do air molecules bump into?"


def test_fix_agreement_singular_unchanged():
    out = fix_agreement("What does the plane carry?", "the plane")
    assert out == "What does the plane carry?"


def test_fix_agreement_without_subject_unchanged():
    assert fix_agreement("What bumps into things?", None) == \
        "What bumps into things?"


def test_fix_agreement_changes_at_most_one_token():
    before = "What does air molecules bump into?".split()
    after = fix_agreement("What does air molecules bump into?", "air molecules").split()
    assert sum(1 for a, b in zip(before, after) if a != b) == 1


def test_fix_agreement_ignores_agreeing_words_in_filler():
    out = fix_agreement("When did the man who is tall arrive?", "the man who is tall")
    assert out == "When did the man who is tall arrive?"


def test_plural_heuristic():
    assert plural_heuristic("air molecules")
    assert plural_heuristic("they")
    assert not plural_heuristic("the plane")
    assert not plural_heuristic("the bus")
    assert not plural_heuristic("the boss")


def test_chooser_receives_masked_protocol_shape():
    calls = []

    def chooser(masked, options, filler):
        calls.append((masked, options, filler))
        return options[0]

    fix_agreement("What does air molecules bump into?", "air molecules", chooser)
    assert calls == [("What [MASK] air molecules bump into?", ["do", "does"],
                      "air molecules")]


# --------------------------------------------------------------------------
# seq2seq format

def test_seq2seq_geologists_golden():
    frame = frame_from_dict({
        "sentence_id": "geo",
        "tokens": ["Some", "geologists", "study", "the", "Moon", "."],
        "predicate": {"index": 2, "lemma": "study"},
        "entries": [{"slots": {"wh": "who", "verb": "study",
                               "verb_form": "present3sg", "obj": "something"},
                     "answers": [{"start": 0, "end": 2}]}],
    })
    aligned = build_frame_aligned(frame)
    entry = aligned.entries[0]
    entry = type(entry)(entry.question, entry.prototype, "Who studies the moon?",
                        entry.fills, entry.unfilled)
    source, target = build_seq2seq_example(frame, entry)
    assert source == ("Some geologists PREDICATE-START study PREDICATE-END "
                      "the Moon . </s> study [SEP] what studies something ?")
    assert target == "Who studies the moon?"


def test_seq2seq_predicate_at_start():
    source = seq2seq_input(("Run", "!"), 0, "run", "what runs ?")
    assert source.startswith("PREDICATE-START Run PREDICATE-END !")


def test_filled_frame_seq2seq_pair():
    aligned = build_frame_aligned(molecules_frame())
    source, target = build_seq2seq_example(aligned.frame, aligned.entries[1])
    assert "PREDICATE-START bump PREDICATE-END" in source
    assert target == "What do air molecules bump into?"


# --------------------------------------------------------------------------
# JSONL round trip and errors

def test_frames_jsonl_errors_carry_line_numbers(tmp_path):
    path = tmp_path / "bad.jsonl"
    path.write_text('{"sentence_id": "a", "tokens": ["x"], '
                    '"predicate": {"index": 5, "lemma": "x"}, "entries": []}\n',
                    encoding="utf-8")
    with pytest.raises(DataError) as info:
        read_frames_jsonl(path)
    assert info.value.line == 1


def test_aligned_dict_mirrors_input(mini_frames):
    aligned = build_frame_aligned(mini_frames[0])
    obj = aligned_to_dict(aligned)
    assert obj["sentence_id"] == mini_frames[0].sentence_id
    assert {"prototype", "contextualized", "fills", "unfilled"} <= set(obj["entries"][0])
    assert set(obj["placeholder_stats"]) == {"total", "filled_base", "filled_with_extras"}
    json.dumps(obj)  # serializable
