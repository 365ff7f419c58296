import json
from importlib import resources

import pytest

from roleq.cli import main


def mini(name):
    with resources.as_file(resources.files("roleq").joinpath(f"data/mini/{name}")) as p:
        return str(p)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# --------------------------------------------------------------------------
# single-question commands

def test_prototype_command(capsys):
    code, out, _ = run(capsys, "prototype", "--question", "What won't be fixed?")
    assert code == 0 and out.strip() == "What is fixed?"


def test_parse_command(capsys):
    code, out, _ = run(capsys, "parse", "--question", "Who might bring something to someone?")
    assert code == 0
    fields = dict(line.split("\t") for line in out.strip().splitlines())
    assert fields["aux"] == "might" and fields["verb"] == "bring"


def test_readings_command(capsys):
    code, out, _ = run(capsys, "readings", "--question", "What does something give up?")
    assert code == 0
    assert out.count("gap=") == 2
    assert "* gap=pp/up" in out


def test_usage_error_exit_code(capsys):
    assert run(capsys, "parse")[0] == 1
    assert run(capsys, "no-such-command")[0] == 1


def test_bad_question_is_data_error(capsys):
    code, _, err = run(capsys, "parse", "--question", "Blue the sold what ?")
    assert code == 2 and "error" in err


# --------------------------------------------------------------------------
# align

def test_align_writes_outputs_and_stats(tmp_path, capsys):
    out_path = tmp_path / "aligned.jsonl"
    pairs_path = tmp_path / "pairs.tsv"
    code, out, _ = run(capsys, "align", "--in", mini("frames.jsonl"),
                       "--out", str(out_path), "--seq2seq", str(pairs_path),
                       "--workers", "1")
    assert code == 0
    assert "#stats " in out
    lines = out_path.read_text(encoding="utf-8").splitlines()
    assert len(lines) == 54
    first = json.loads(lines[0])
    assert "placeholder_stats" in first
    pair_lines = pairs_path.read_text(encoding="utf-8").splitlines()
    assert all("\t" in line and "[SEP]" in line for line in pair_lines)


def test_align_extras_toggle_keeps_both_stats(tmp_path, capsys):
    out_on = tmp_path / "on.jsonl"
    out_off = tmp_path / "off.jsonl"
    _, stats_on, _ = run(capsys, "align", "--in", mini("frames.jsonl"),
                         "--out", str(out_on), "--extras", "on", "--workers", "1")
    _, stats_off, _ = run(capsys, "align", "--in", mini("frames.jsonl"),
                          "--out", str(out_off), "--extras", "off", "--workers", "1")
    for stats in (stats_on, stats_off):
        summary = [l for l in stats.splitlines() if l.startswith("#stats")][0]
        fields = dict(kv.split("=") for kv in summary.split()[1:])
        assert int(fields["filled_with_extras"]) >= int(fields["filled_base"])
    # extras=off leaves extra-rule placeholders unfilled in the output
    fills_on = sum(len(e["fills"]) for line in out_on.read_text().splitlines()
                   for e in json.loads(line)["entries"])
    fills_off = sum(len(e["fills"]) for line in out_off.read_text().splitlines()
                    for e in json.loads(line)["entries"])
    assert fills_on > fills_off


def test_align_is_deterministic(tmp_path, capsys):
    a = tmp_path / "a.jsonl"
    b = tmp_path / "b.jsonl"
    run(capsys, "align", "--in", mini("frames.jsonl"), "--out", str(a), "--workers", "1")
    run(capsys, "align", "--in", mini("frames.jsonl"), "--out", str(b), "--workers", "2")
    assert a.read_bytes() == b.read_bytes()


def test_align_never_mutates_input(tmp_path, capsys):
    source = mini("frames.jsonl")
    before = open(source, "rb").read()
    run(capsys, "align", "--in", source, "--out", str(tmp_path / "o.jsonl"),
        "--workers", "1")
    assert open(source, "rb").read() == before


def test_align_data_error_names_line(tmp_path, capsys):
    bad = tmp_path / "bad.jsonl"
    bad.write_text('{"sentence_id": "a"}\n', encoding="utf-8")
    code, _, err = run(capsys, "align", "--in", str(bad),
                       "--out", str(tmp_path / "o.jsonl"))
    assert code == 2
    assert f"{bad}:1" in err


# --------------------------------------------------------------------------
# build-lexicon

def test_build_lexicon_frequency_mode(tmp_path, capsys):
    out = tmp_path / "lexicon.tsv"
    code, stdout, _ = run(capsys, "build-lexicon",
                          "--candidates", mini("candidates.tsv"),
                          "--corpus", mini("gold.jsonl"),
                          "--out", str(out))
    assert code == 0 and "#stats " in stdout
    rows = [line.split("\t") for line in out.read_text().splitlines()]
    assert all(len(row) == 6 for row in rows)
    lemmas = {row[0] for row in rows}
    assert "*" in lemmas and "win" in lemmas


def test_build_lexicon_deterministic(tmp_path, capsys):
    a, b = tmp_path / "a.tsv", tmp_path / "b.tsv"
    for path in (a, b):
        run(capsys, "build-lexicon", "--candidates", mini("candidates.tsv"),
            "--corpus", mini("gold.jsonl"), "--out", str(path), "--seed", "7")
    assert a.read_bytes() == b.read_bytes()


# --------------------------------------------------------------------------
# generate and stats

def test_generate_command(tmp_path, capsys):
    lexicon = tmp_path / "lex.tsv"
    lexicon.write_text(
        "arrive\t01\tA1\twhat arrives ?\t-\t0\n"
        "arrive\t01\tA4\twhere does something arrive ?\t-\t0\n"
        "*\t*\tAM-TMP\twhen does something arrive ?\t-\t0\n",
        encoding="utf-8")
    code, out, _ = run(capsys, "generate",
                       "--sentence", "The tourists will arrive in Mexico at noon .",
                       "--pred-index", "3", "--lemma", "arrive", "--sense", "01",
                       "--lexicon", str(lexicon), "--all-roles",
                       "--adjuncts", "AM-TMP", "--fill", "subj=0:2")
    assert code == 0
    lines = dict(line.split("\t") for line in out.strip().splitlines())
    assert lines["A1"] == "Who will arrive?"
    assert lines["A4"] == "Where will the tourists arrive?"
    assert lines["AM-TMP"] == "When will the tourists arrive?"


def test_generate_missing_prototype_reported(tmp_path, capsys):
    lexicon = tmp_path / "lex.tsv"
    lexicon.write_text("arrive\t01\tA1\twhat arrives ?\t-\t0\n", encoding="utf-8")
    code, out, _ = run(capsys, "generate", "--sentence", "They arrive today .",
                       "--pred-index", "1", "--lemma", "arrive", "--sense", "01",
                       "--lexicon", str(lexicon), "--role", "A1", "--role", "A4")
    assert code == 0
    assert "A4\t<no prototype>" in out


def test_stats_command(tmp_path, capsys):
    aligned = tmp_path / "aligned.jsonl"
    run(capsys, "align", "--in", mini("frames.jsonl"), "--out", str(aligned),
        "--workers", "1")
    code, out, _ = run(capsys, "stats", "--in", str(aligned))
    assert code == 0
    summary = [l for l in out.splitlines() if l.startswith("#stats")][0]
    assert "filled_with_extras=" in summary


def test_backend_error_exit_code(tmp_path, capsys):
    code, _, err = run(capsys, "generate", "--sentence", "They arrive .",
                       "--pred-index", "1", "--lemma", "arrive",
                       "--lexicon", mini("candidates.tsv"),
                       "--role", "A1", "--backend", "/no/such/backend")
    assert code in (2, 3)  # lexicon parse fails first or backend spawn fails
