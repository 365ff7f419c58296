#!/usr/bin/env python3
"""Generate the bundled mini corpus (data/mini/).

* questions.tsv  -- slot records sweeping the aux-chain grammar, for
                    round-trip and prototype normal-form tests
* frames.jsonl   -- synthetic frames exercising base alignment and each of
                    the four extra correspondences
* gold.jsonl     -- gold argument corpus for sampling/selection
* candidates.tsv -- prototype candidates per role for lexicon builds
* roles.tsv      -- core-role inventories for generation demos

Deterministic: fixed seed, stable iteration order.
"""

import json
import random
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from roleq.grammar import (  # noqa: E402
    SlotQuestion, TamvnSignature, apply_tamvn, load_default_lexicon,
    parse_surface, render, slots_record,
)
from roleq.errors import GrammarError  # noqa: E402
from roleq.prototypes import CandidateTable, write_candidates_tsv  # noqa: E402

OUT = Path(__file__).resolve().parents[1] / "src" / "roleq" / "data" / "mini"
LEX = load_default_lexicon()
RNG = random.Random(48151623)


# --------------------------------------------------------------------------
# questions.tsv

SKELETONS = [
    # (wh, subj, obj, prep, misc, passive)
    ("what", None, "something", None, None, False),
    ("who", None, "something", "to", "someone", False),
    ("what", None, None, "into", "something", False),
    ("what", "someone", None, None, None, False),
    ("what", "something", None, "into", None, False),
    ("who", "someone", "something", None, None, False),
    ("what", "someone", None, None, "somewhere", False),
    ("where", "someone", "something", None, None, False),
    ("when", "something", "something", None, None, False),
    ("why", "someone", None, None, None, False),
    ("how", "something", None, "with", "something", False),
    ("what", None, None, None, None, True),
    ("what", "something", None, "for", None, True),
    ("who", None, None, "by", "someone", True),
    ("how much", "something", None, "for", None, True),
]

VERBS = ["fix", "bring", "sell", "bump", "give", "make", "move", "carry",
         "build", "change", "study", "win", "push", "break", "paint", "send"]

SIGNATURES = [
    dict(tense="present"),
    dict(tense="past"),
    dict(tense="future"),
    dict(tense="present", negated=True),
    dict(tense="past", negated=True),
    dict(tense="future", negated=True),
    dict(tense="present", modal="might"),
    dict(tense="present", modal="should", negated=True),
    dict(tense="present", modal="can"),
    dict(tense="present", modal="would"),
    dict(tense="present", perfect=True),
    dict(tense="past", perfect=True),
    dict(tense="present", progressive=True),
    dict(tense="past", progressive=True),
    dict(tense="present", modal="might", perfect=True),
    dict(tense="present", modal="must", progressive=True),
    dict(tense="present", perfect=True, progressive=True),
    dict(tense="future", perfect=True),
]

ANIMACIES = [
    dict(),
    dict(animacy_subj="animate"),
    dict(animacy_obj="animate"),
    dict(animacy_subj="animate", animacy_misc="animate"),
]


def base_question(skeleton, verb) -> SlotQuestion:
    wh, subj, obj, prep, misc, passive = skeleton
    if passive:
        q = SlotQuestion(wh, "is", subj, verb, "past-participle", (), obj, prep, misc)
    elif subj is None:
        q = SlotQuestion(wh, None, None, verb, "present3sg", (), obj, prep, misc)
    else:
        q = SlotQuestion(wh, "does", subj, verb, "stem", (), obj, prep, misc)
    return q.validate()


def make_questions():
    rows = []
    seen = set()
    for i, skeleton in enumerate(SKELETONS):
        for j, verb in enumerate(VERBS):
            if (i + j) % 4 == 0:
                sigs = SIGNATURES
            else:
                sigs = RNG.sample(SIGNATURES, 2)
            for sig_kwargs in sigs:
                animacy = RNG.choice(ANIMACIES)
                sig = TamvnSignature(**{**sig_kwargs, **animacy})
                try:
                    q = apply_tamvn(base_question(skeleton, verb), sig, LEX)
                except GrammarError:
                    continue
                surface = render(q, LEX)
                if parse_surface(surface, LEX) != q:
                    raise AssertionError(f"not canonical: {surface}")
                if q in seen:
                    continue
                seen.add(q)
                rows.append(q)
    with open(OUT / "questions.tsv", "w", encoding="utf-8") as handle:
        handle.write("# wh\taux\tsubj\tverb\tverb_form\tobj\tprep\tmisc\n")
        for q in rows:
            record = slots_record(q)
            handle.write("\t".join(record[k] for k in
                                   ("wh", "aux", "subj", "verb", "verb_form",
                                    "obj", "prep", "misc")) + "\n")
    return rows


# --------------------------------------------------------------------------
# frames.jsonl

def span_of(tokens, phrase):
    words = phrase.split()
    for start in range(len(tokens) - len(words) + 1):
        if tokens[start:start + len(words)] == words:
            return {"start": start, "end": start + len(words)}
    raise ValueError(f"{phrase!r} not in {tokens}")


def entry(question_text, tokens, *answers):
    q = parse_surface(question_text, LEX)
    return {"slots": slots_record(q),
            "answers": [span_of(tokens, a) for a in answers]}


FRAME_COUNTER = 0


def frame(sentence, lemma, pred_word, entries, sense=None):
    global FRAME_COUNTER
    FRAME_COUNTER += 1
    tokens = sentence.split()
    predicate = {"index": tokens.index(pred_word), "lemma": lemma}
    if sense:
        predicate["sense"] = sense
    return {"sentence_id": f"mini-{FRAME_COUNTER:04d}", "tokens": tokens,
            "predicate": predicate,
            "entries": [e(tokens) if callable(e) else e for e in entries]}


def make_frames():
    frames = []

    # Subject/prepositional-object pairs (Fig.-4 shaped; base rule).
    pairs = [
        ("Air molecules move a lot and bump into things .", "bump", "bumps", "bump",
         "into", "Air molecules", "things"),
        ("The trucks crashed into the barrier .", "crash", "crashed", "crash",
         "into", "The trucks", "the barrier"),
        ("Sparks flew into the dry grass .", "fly", "flew", "fly",
         "into", "Sparks", "the dry grass"),
        ("The dog ran into the kitchen table .", "run", "ran", "run",
         "into", "The dog", "the kitchen table"),
        ("The guests arrived at the old hotel .", "arrive", "arrived", "arrive",
         "at", "The guests", "the old hotel"),
        ("The students looked at the blackboard .", "look", "looked", "look",
         "at", "The students", "the blackboard"),
        ("The ferry sailed into the foggy harbor .", "sail", "sailed", "sail",
         "into", "The ferry", "the foggy harbor"),
        ("The children listened to the radio play .", "listen", "listened", "listen",
         "to", "The children", "the radio play"),
        ("The interns worked on the annual report .", "work", "worked", "work",
         "on", "The interns", "the annual report"),
        ("The hikers slipped on the wet rocks .", "slip", "slipped", "slip",
         "on", "The hikers", "the wet rocks"),
    ]
    for sentence, lemma, past3, stem, prep, subj_answer, pp_answer in pairs:
        tokens = sentence.split()
        surface = tokens[tokens.index(past3 if past3 in tokens else stem)]
        present = LEX.lookup(lemma).present3sg
        q1 = f"What {present} {prep} something?"
        q2 = f"What does something {stem} {prep}?"
        frames.append(frame(sentence, lemma, surface, [
            entry(q1, tokens, subj_answer),
            entry(q2, tokens, pp_answer),
        ]))

    # Active/passive families: base fills plus correspondences 1 and 2.
    transitive = [
        ("The plumber fixed the leaking pipes .", "fix", "fixed",
         "The plumber", "the leaking pipes"),
        ("The movers carried the heavy boxes .", "carry", "carried",
         "The movers", "the heavy boxes"),
        ("The editors checked the final draft .", "check", "checked",
         "The editors", "the final draft"),
        ("The farmers planted the olive trees .", "plant", "planted",
         "The farmers", "the olive trees"),
        ("The committee approved the new budget .", "approve", "approved",
         "The committee", "the new budget"),
        ("The chef prepared the evening meal .", "prepare", "prepared",
         "The chef", "the evening meal"),
        ("The engineers tested the landing gear .", "test", "tested",
         "The engineers", "the landing gear"),
        ("The council repaired the broken bridge .", "repair", "repaired",
         "The council", "the broken bridge"),
        ("The storm damaged the power lines .", "damage", "damaged",
         "The storm", "the power lines"),
        ("The auditors reviewed the annual accounts .", "review", "reviewed",
         "The auditors", "the annual accounts"),
        ("The students solved the last puzzle .", "solve", "solved",
         "The students", "the last puzzle"),
        ("The guards opened the main gate .", "open", "opened",
         "The guards", "the main gate"),
    ]
    for index, (sentence, lemma, past, agent, patient) in enumerate(transitive):
        tokens = sentence.split()
        pp = LEX.lookup(lemma).past_participle
        active_subj = entry(f"Who {past} something?", tokens, agent)
        active_obj = entry(f"What did someone {lemma}?", tokens, patient)
        passive_subj = entry(f"What was {pp}?", tokens, patient)
        passive_by = entry(f"Who was something {pp} by?", tokens, agent)
        if index % 4 == 0:
            # Passive plus subject question only: fills need correspondence 1.
            entries = [active_subj, passive_subj]
        elif index % 4 == 1:
            # by-PP pair: correspondence 2 on both sides.
            entries = [active_obj, passive_by]
        elif index % 4 == 2:
            entries = [active_subj, active_obj, passive_subj]
        else:
            entries = [active_subj, active_obj, passive_by, passive_subj]
        frames.append(frame(sentence, lemma, past if past in tokens else lemma, entries))

    # put-style frames: locative/adverbial (correspondence 3) and
    # stripped-third-argument subject/object alignment (correspondence 4).
    put_frames = [
        ("The librarian put the atlas on the top shelf .", "put", "put",
         "The librarian", "the atlas", "on the top shelf"),
        ("The movers left the piano in the hallway .", "leave", "left",
         "The movers", "the piano", "in the hallway"),
        ("The curator placed the vase near the entrance .", "place", "placed",
         "The curator", "the vase", "near the entrance"),
        ("The workers stored the cement under the stairs .", "store", "stored",
         "The workers", "the cement", "under the stairs"),
        ("The clerk filed the report in the archive .", "file", "filed",
         "The clerk", "the report", "in the archive"),
        ("The gardener planted the roses along the fence .", "plant", "planted",
         "The gardener", "the roses", "along the fence"),
        ("The crew parked the trailer behind the barn .", "park", "parked",
         "The crew", "the trailer", "behind the barn"),
    ]
    for index, (sentence, lemma, past, agent, patient, loc) in enumerate(put_frames):
        tokens = sentence.split()
        if index % 2 == 0:
            # A "somewhere" sibling anchors the where-question to the
            # locative reading; fills stay within the base rule.
            third = entry(f"Who {past} something somewhere?", tokens, agent)
        else:
            # A plain transitive sibling leaves the where-question on the
            # adverbial reading, so the locative placeholder needs
            # correspondence 3.
            third = entry(f"Who {past} something?", tokens, agent)
        frames.append(frame(sentence, lemma, past, [
            entry(f"Where did someone {lemma} something?", tokens, loc),
            entry(f"What did someone {lemma} somewhere?", tokens, patient),
            third,
        ]))

    # Ditransitives: who resolves to the first object, what to the second.
    ditransitive = [
        ("The teacher gave the students extra homework .", "give", "gave",
         "The teacher", "the students", "extra homework"),
        ("The manager sent the client a revised offer .", "send", "sent",
         "The manager", "the client", "a revised offer"),
        ("The coach showed the players the game plan .", "show", "showed",
         "The coach", "the players", "the game plan"),
        ("Grandmother told the children a long story .", "tell", "told",
         "Grandmother", "the children", "a long story"),
        ("The bank offered the farmers a cheap loan .", "offer", "offered",
         "The bank", "the farmers", "a cheap loan"),
    ]
    for sentence, lemma, past, agent, recipient, theme in ditransitive:
        tokens = sentence.split()
        frames.append(frame(sentence, lemma, past, [
            entry(f"Who gave someone something?".replace("gave", past), tokens, agent),
            entry(f"Who did someone {lemma} something?", tokens, recipient),
            entry(f"What did someone {lemma} someone?", tokens, theme),
        ]))

    # to-PP frames in the stripped-misc style.
    to_frames = [
        ("John brought flowers to Mary .", "bring", "brought",
         "John", "flowers", "Mary"),
        ("The courier delivered packages to the office .", "deliver", "delivered",
         "The courier", "packages", "the office"),
        ("The volunteers donated blankets to the shelter .", "donate", "donated",
         "The volunteers", "blankets", "the shelter"),
        ("The firm leased trucks to the builders .", "lease", "leased",
         "The firm", "trucks", "the builders"),
    ]
    for sentence, lemma, past, agent, theme, goal in to_frames:
        tokens = sentence.split()
        frames.append(frame(sentence, lemma, past, [
            entry(f"Who {past} something?", tokens, agent),
            entry(f"Who did someone {lemma} something to?", tokens, goal),
            entry(f"What did someone {lemma} to someone?", tokens, theme),
        ]))

    # Intransitives with adverbial questions.
    adverbial = [
        ("The residents protested because of the smell .", "protest", "protested",
         "The residents", "because of the smell"),
        ("The tourists arrived at noon yesterday .", "arrive", "arrived",
         "The tourists", "at noon yesterday"),
        ("The talks collapsed after three days .", "collapse", "collapsed",
         "The talks", "after three days"),
        ("The engine failed during the second lap .", "fail", "failed",
         "The engine", "during the second lap"),
    ]
    for sentence, lemma, past, agent, why in adverbial:
        tokens = sentence.split()
        wh = "Why" if "because" in sentence else "When"
        frames.append(frame(sentence, lemma, past, [
            entry(f"Who {past}?", tokens, agent),
            entry(f"{wh} did someone {lemma}?", tokens, why),
        ]))

    # xcomp frames.
    xcomp = [
        ("The coach made the players run laps .", "make", "made",
         "The coach", "the players"),
        ("The director let the actors improvise freely .", "let", "let",
         "The director", "the actors"),
    ]
    for sentence, lemma, past, agent, patient in xcomp:
        tokens = sentence.split()
        frames.append(frame(sentence, lemma, past, [
            entry(f"Who {past} someone do something?", tokens, agent),
            entry(f"Who did someone {lemma} do something?", tokens, patient),
        ]))

    # Passive with a non-by PP: correspondence 1 deliberately excluded.
    excluded = [
        ("The goods were sold for a profit .", "sell", "sold",
         "The goods", "a profit"),
        ("The tickets were exchanged for vouchers .", "exchange", "exchanged",
         "The tickets", "vouchers"),
    ]
    for sentence, lemma, pp_form, patient, price in excluded:
        tokens = sentence.split()
        frames.append(frame(sentence, lemma, pp_form, [
            entry(f"What did someone {lemma}?", tokens, patient),
            entry(f"What was something {pp_form} for?", tokens, price),
        ]))

    # Single-question frames: nothing to align.
    singles = [
        ("The pipes won't be fixed .", "fix", "fixed", "What won't be fixed?", "The pipes"),
        ("The contract might have been changed .", "change", "changed",
         "What might have been changed?", "The contract"),
        ("The choir is singing tonight .", "sing", "singing", "What is singing?", "The choir"),
        ("The glacier has been melting for years .", "melt", "melting",
         "What has been melting?", "The glacier"),
        ("The witness would not testify today .", "testify", "testify",
         "Who wouldn't testify?", "The witness"),
        ("The committee may reconsider the ruling .", "reconsider", "reconsider",
         "What may be reconsidered?", "the ruling"),
    ]
    for sentence, lemma, surface, question, answer in singles:
        tokens = sentence.split()
        frames.append(frame(sentence, lemma, surface, [entry(question, tokens, answer)]))

    # Multi-answer entries: span tie-breaking.
    sentence = "The old farmer fed the hungry chickens at dawn ."
    tokens = sentence.split()
    frames.append(frame(sentence, "feed", "fed", [
        {"slots": slots_record(parse_surface("Who fed something?", LEX)),
         "answers": [span_of(tokens, "The old farmer"), span_of(tokens, "farmer")]},
        entry("What did someone feed?", tokens, "the hungry chickens"),
    ]))

    # A second Fig.-4-like frame with plural agreement repair.
    sentence = "Heavy waves crash against the sea wall ."
    tokens = sentence.split()
    frames.append(frame(sentence, "crash", "crash", [
        entry("What crashes against something?", tokens, "Heavy waves"),
        entry("What does something crash against?", tokens, "the sea wall"),
    ]))

    with open(OUT / "frames.jsonl", "w", encoding="utf-8") as handle:
        for obj in frames:
            handle.write(json.dumps(obj, ensure_ascii=False) + "\n")
    return frames


# --------------------------------------------------------------------------
# gold.jsonl

def make_gold():
    gold = []
    counter = 0

    def sentence(tokens, lemma, sense, pred_word, arguments):
        nonlocal counter
        counter += 1
        return {
            "sentence_id": f"gold-{counter:04d}",
            "tokens": tokens,
            "predicate": {"index": tokens.index(pred_word), "lemma": lemma,
                          "sense": sense},
            "arguments": [
                {"role": role, **span_of(tokens, phrase)}
                for role, phrase in arguments
            ],
        }

    teams = ["The home team", "The visitors", "Our squad", "The champions",
             "The rookies", "The veterans"]
    prizes = ["the cup", "the league", "the final", "the derby", "the match",
              "the tournament"]
    places = ["in Madrid", "in Lisbon", "at home", "in the rain", "at the stadium",
              "in overtime"]
    for i in range(12):
        text = f"{teams[i % 6]} won {prizes[(i * 5) % 6]} {places[(i * 7) % 6]} ."
        gold.append(sentence(text.split(), "win", "01", "won",
                             [("A0", teams[i % 6]), ("A1", prizes[(i * 5) % 6]),
                              ("AM-LOC", places[(i * 7) % 6])]))
    people = ["The mayor", "The author", "The captain", "The singer"]
    honors = ["new respect", "wide acclaim", "their trust", "a loyal following"]
    for i in range(8):
        text = f"{people[i % 4]} won {honors[(i * 3) % 4]} {places[i % 6]} ."
        gold.append(sentence(text.split(), "win", "02", "won",
                             [("A0", people[i % 4]), ("A1", honors[(i * 3) % 4]),
                              ("AM-LOC", places[i % 6])]))

    fixers = ["The plumber", "The electrician", "The mechanic", "The janitor"]
    broken = ["the boiler", "the wiring", "the gearbox", "the lock"]
    for i in range(8):
        text = f"{fixers[i % 4]} fixed {broken[(i * 3) % 4]} yesterday ."
        gold.append(sentence(text.split(), "fix", "01", "fixed",
                             [("A0", fixers[i % 4]), ("A1", broken[(i * 3) % 4]),
                              ("AM-TMP", "yesterday")]))

    bringers = ["The waiter", "The porter", "The nurse", "The scouts"]
    things = ["the menu", "fresh towels", "the medicine", "firewood"]
    dests = ["to the table", "to the room", "to the ward", "to the camp"]
    for i in range(8):
        text = f"{bringers[i % 4]} brought {things[i % 4]} {dests[i % 4]} ."
        gold.append(sentence(text.split(), "bring", "01", "brought",
                             [("A0", bringers[i % 4]), ("A1", things[i % 4]),
                              ("A2", dests[i % 4])]))

    students = ["Some geologists", "The interns", "Two linguists", "The fellows"]
    topics = ["the Moon", "old maps", "rare dialects", "the archive"]
    for i in range(8):
        text = f"{students[i % 4]} study {topics[(i * 3) % 4]} closely ."
        gold.append(sentence(text.split(), "study", "01", "study",
                             [("A0", students[i % 4]), ("A1", topics[(i * 3) % 4]),
                              ("AM-MNR", "closely")]))

    putters = ["The librarian", "The grocer", "The curator", "The clerk"]
    put_things = ["the atlas", "the crates", "the vase", "the files"]
    put_places = ["on the shelf", "in the cellar", "near the door", "in the safe"]
    for i in range(8):
        text = f"{putters[i % 4]} put {put_things[i % 4]} {put_places[i % 4]} ."
        gold.append(sentence(text.split(), "put", "01", "put",
                             [("A0", putters[i % 4]), ("A1", put_things[i % 4]),
                              ("AM-LOC", put_places[i % 4])]))

    with open(OUT / "gold.jsonl", "w", encoding="utf-8") as handle:
        for obj in gold:
            handle.write(json.dumps(obj, ensure_ascii=False) + "\n")
    return gold


# --------------------------------------------------------------------------
# candidates.tsv and roles.tsv

def make_candidates():
    table = CandidateTable()
    rows = [
        ("win", "A0", "what wins something ?", 9),
        ("win", "A1", "what does something win ?", 11),
        ("win", "A1", "what is won ?", 2),
        ("win", "AM-LOC", "where does something win ?", 3),
        ("win", "AM-LOC", "what does something win at ?", 5),
        ("fix", "A0", "what fixes something ?", 7),
        ("fix", "A1", "what is fixed ?", 12),
        ("fix", "A1", "what does something fix ?", 6),
        ("fix", "AM-TMP", "when does something fix something ?", 4),
        ("bring", "A0", "what brings something ?", 6),
        ("bring", "A1", "what does something bring ?", 9),
        ("bring", "A2", "where does something bring something ?", 4),
        ("bring", "A2", "what does something bring something to ?", 2),
        ("study", "A0", "what studies something ?", 8),
        ("study", "A1", "what does something study ?", 10),
        ("study", "AM-MNR", "how does something study something ?", 3),
        ("put", "A0", "what puts something somewhere ?", 5),
        ("put", "A1", "what does something put somewhere ?", 7),
        ("put", "AM-LOC", "where does something put something ?", 6),
    ]
    for lemma, role, proto, count in rows:
        table.add(lemma, role, proto, count)
    write_candidates_tsv(table, OUT / "candidates.tsv")


def make_roles():
    rows = [
        ("arrive", "01", "A1", "entity in motion"),
        ("arrive", "01", "A4", "end point"),
        ("arrive", "01", "A3", "start point"),
        ("change", "01", "A0", "causer of transformation"),
        ("change", "01", "A1", "thing changing"),
        ("change", "01", "A2", "end state"),
        ("change", "01", "A3", "start state"),
        ("win", "01", "A0", "winner"),
        ("win", "01", "A1", "prize"),
        ("win", "02", "A0", "earner"),
        ("win", "02", "A1", "thing earned"),
        ("fix", "01", "A0", "fixer"),
        ("fix", "01", "A1", "thing fixed"),
        ("bring", "01", "A0", "bringer"),
        ("bring", "01", "A1", "thing brought"),
        ("bring", "01", "A2", "destination"),
        ("study", "01", "A0", "student"),
        ("study", "01", "A1", "subject"),
        ("put", "01", "A0", "putter"),
        ("put", "01", "A1", "thing put"),
    ]
    with open(OUT / "roles.tsv", "w", encoding="utf-8") as handle:
        for row in rows:
            handle.write("\t".join(row) + "\n")


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    questions = make_questions()
    frames = make_frames()
    gold = make_gold()
    make_candidates()
    make_roles()
    print(f"questions: {len(questions)}")
    print(f"frames:    {len(frames)}")
    print(f"gold:      {len(gold)} sentences")


if __name__ == "__main__":
    main()
