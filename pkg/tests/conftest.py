import pytest

from roleq.framealign import read_frames_jsonl
from roleq.grammar import load_default_lexicon, parse_slots
from roleq.selection import read_gold_corpus

from importlib import resources


def mini_path(name: str):
    return resources.files("roleq").joinpath(f"data/mini/{name}")


@pytest.fixture(scope="session")
def lexicon():
    return load_default_lexicon()


@pytest.fixture(scope="session")
def mini_questions():
    rows = []
    with resources.as_file(mini_path("questions.tsv")) as path:
        with open(path, encoding="utf-8") as handle:
            header = None
            for line in handle:
                line = line.rstrip("\n")
                if line.startswith("#"):
                    header = line[1:].strip().split("\t")
                    continue
                if not line:
                    continue
                rows.append(parse_slots(dict(zip(header, line.split("\t")))))
    return rows


@pytest.fixture(scope="session")
def mini_frames():
    with resources.as_file(mini_path("frames.jsonl")) as path:
        return read_frames_jsonl(path)


@pytest.fixture(scope="session")
def mini_gold():
    with resources.as_file(mini_path("gold.jsonl")) as path:
        return read_gold_corpus(path)
