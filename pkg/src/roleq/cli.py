"""Command-line entry point.

Subcommands expose each pipeline stage: ``parse`` and ``prototype`` for
single questions, ``readings`` for ambiguity debugging, ``align`` for the
frame-aligned corpus build, ``build-lexicon`` for prototype selection,
``generate`` for role questions over a sentence, and ``stats`` for
coverage reports over aligned corpora.

Exit codes: 0 success, 1 usage error, 2 data error, 3 backend error.
Outputs are written atomically (temp file + rename) and are byte-identical
across runs given the same inputs, seed and backend.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile

from . import framealign, pipeline, prototypes, readings, selection
from .errors import BackendError, DataError, ParseError, RoleqError
from .grammar import InflectionLexicon, load_default_lexicon, parse_surface, render

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2
EXIT_BACKEND = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _atomic_write(path, write):
    """Write via a sibling temp file and rename, so readers never see a
    partial file and inputs are never clobbered on failure."""
    directory = os.path.dirname(os.path.abspath(path)) or "."
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tmp-", text=True)
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as handle:
            write(handle)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _load_inflections(args) -> InflectionLexicon:
    if getattr(args, "inflections", None):
        return InflectionLexicon.from_tsv(args.inflections)
    return load_default_lexicon()


def _open_backend(args):
    if getattr(args, "backend", None):
        return pipeline.ProcessBackend(args.backend, timeout=args.backend_timeout)
    return None


def _threshold(value: str) -> float:
    number = float(value)
    if not 0.0 <= number <= 1.0:
        raise argparse.ArgumentTypeError("threshold must be in [0, 1]")
    return number


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="roleq", description=__doc__,
                     formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("-v", "--verbose", action="count", default=0,
                        help="more progress output on stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    common_lex = argparse.ArgumentParser(add_help=False)
    common_lex.add_argument("--inflections", metavar="TSV",
                            help="verb inflection table (default: bundled)")

    p = sub.add_parser("parse", parents=[common_lex],
                       help="parse a surface question into slots")
    p.add_argument("--question", required=True)

    p = sub.add_parser("prototype", parents=[common_lex],
                       help="print a question's context-independent prototype")
    p.add_argument("--question", required=True)

    p = sub.add_parser("readings", parents=[common_lex],
                       help="print a question's declarative readings")
    p.add_argument("--question", required=True)

    p = sub.add_parser("align", parents=[common_lex],
                       help="build a frame-aligned corpus from frames JSONL")
    p.add_argument("--in", dest="input", required=True, metavar="JSONL")
    p.add_argument("--out", required=True, metavar="JSONL")
    p.add_argument("--seq2seq", metavar="TSV",
                   help="also write input/target training pairs")
    p.add_argument("--extras", choices=("on", "off"), default="on",
                   help="apply the four extra correspondences (default on)")
    p.add_argument("--workers", type=int, default=0,
                   help="parallel workers (default: number of processors)")
    p.add_argument("--backend", metavar="CMD",
                   help="model backend command for agreement choices")
    p.add_argument("--backend-timeout", type=float, default=pipeline.DEFAULT_TIMEOUT)

    p = sub.add_parser("build-lexicon", parents=[common_lex],
                       help="select prototypes per role into a lexicon TSV")
    p.add_argument("--candidates", required=True, metavar="TSV")
    p.add_argument("--corpus", required=True, metavar="JSONL",
                   help="gold argument corpus")
    p.add_argument("--out", required=True, metavar="TSV")
    p.add_argument("--seed", type=int, default=selection.DEFAULT_SEED)
    p.add_argument("--threshold", type=_threshold, default=selection.COVERAGE_THRESHOLD,
                   help="minimum mean QA F1 to keep an entry (default 0.5)")
    p.add_argument("--workers", type=int, default=0)
    p.add_argument("--backend", metavar="CMD",
                   help="model backend command providing the QA oracle; "
                        "without it, selection is by candidate frequency")
    p.add_argument("--backend-timeout", type=float, default=pipeline.DEFAULT_TIMEOUT)

    p = sub.add_parser("generate", parents=[common_lex],
                       help="generate role questions for one predicate")
    p.add_argument("--sentence", required=True, help="whitespace-tokenized sentence")
    p.add_argument("--pred-index", type=int, required=True)
    p.add_argument("--lemma", required=True)
    p.add_argument("--sense", default="")
    p.add_argument("--lexicon", required=True, metavar="TSV", help="role lexicon")
    p.add_argument("--role", action="append", default=[],
                   help="ask about this role (repeatable)")
    p.add_argument("--all-roles", action="store_true",
                   help="every core role in the inventory plus the adjunct set")
    p.add_argument("--frames", metavar="TSV",
                   help="role inventory (lemma, sense, role, gloss)")
    p.add_argument("--adjuncts", default=",".join(prototypes.ADJUNCT_ROLES),
                   help="comma-separated adjunct role set")
    p.add_argument("--fill", action="append", default=[], metavar="SLOT=START:END",
                   help="placeholder hint, e.g. subj=0:2 (repeatable)")
    p.add_argument("--backend", metavar="CMD")
    p.add_argument("--backend-timeout", type=float, default=pipeline.DEFAULT_TIMEOUT)

    p = sub.add_parser("stats", help="coverage report over an aligned corpus")
    p.add_argument("--in", dest="input", required=True, metavar="JSONL")

    return parser


# --------------------------------------------------------------------------
# Subcommands

def _cmd_parse(args) -> int:
    lexicon = _load_inflections(args)
    question = parse_surface(args.question, lexicon)
    for key, value in framealign.slots_record(question).items():
        print(f"{key}\t{value}")
    return EXIT_OK


def _cmd_prototype(args) -> int:
    lexicon = _load_inflections(args)
    question = parse_surface(args.question, lexicon)
    print(render(prototypes.to_prototype(question, lexicon), lexicon))
    return EXIT_OK


def _cmd_readings(args) -> int:
    lexicon = _load_inflections(args)
    question = parse_surface(args.question, lexicon)
    options = readings.enumerate_readings(question)
    resolved = readings.resolve_reading(question, [])
    for option in options:
        key = readings.structure_key(option)
        marker = "*" if option.positions == resolved.positions else " "
        gap = "/".join(str(part) for part in option.gap)
        print(f"{marker} gap={gap}\tkey={key.sort_token()}")
    if resolved.tie_flagged:
        print("! unresolved tie; smallest key chosen")
    return EXIT_OK


def _align_one(payload):
    frame, extras = payload
    return framealign.build_frame_aligned(frame, extras=extras)


def _cmd_align(args) -> int:
    lexicon = _load_inflections(args)
    frames = framealign.read_frames_jsonl(args.input)
    extras = args.extras == "on"
    backend = _open_backend(args)
    chooser = pipeline.BackendChooser(backend) if backend else framealign.heuristic_chooser
    # Workers share no state; a backend connection or a custom inflection
    # table pins the build to one worker.
    workers = 1 if backend or args.inflections else (args.workers or os.cpu_count() or 1)

    if workers > 1 and len(frames) > 1:
        import multiprocessing

        with multiprocessing.Pool(workers) as pool:
            aligned = pool.map(_align_one, [(f, extras) for f in frames])
    else:
        aligned = [framealign.build_frame_aligned(f, extras=extras, chooser=chooser,
                                                  lexicon=lexicon)
                   for f in frames]
    if backend:
        backend.close()

    def write_jsonl(handle):
        for item in aligned:
            handle.write(json.dumps(framealign.aligned_to_dict(item),
                                    ensure_ascii=False, sort_keys=True) + "\n")

    _atomic_write(args.out, write_jsonl)

    if args.seq2seq:
        def write_pairs(handle):
            for item in aligned:
                for entry in item.entries:
                    pair = framealign.build_seq2seq_example(item.frame, entry)
                    handle.write(f"{pair[0]}\t{pair[1]}\n")

        _atomic_write(args.seq2seq, write_pairs)

    _print_fill_stats(aligned)
    return EXIT_OK


def _print_fill_stats(aligned) -> None:
    total = sum(a.placeholders_total for a in aligned)
    base = sum(a.filled_base for a in aligned)
    extra = sum(a.filled_with_extras for a in aligned)
    excluded = sum(len(a.excluded) for a in aligned)
    print(f"{'frames':>20}  {len(aligned)}")
    print(f"{'placeholders':>20}  {total}")
    print(f"{'filled (base)':>20}  {base}  {_pct(base, total)}")
    print(f"{'filled (extras)':>20}  {extra}  {_pct(extra, total)}")
    print(f"{'rule-1 exclusions':>20}  {excluded}")
    print(f"#stats frames={len(aligned)} placeholders={total} "
          f"filled_base={base} filled_with_extras={extra} excluded={excluded}")


def _pct(part: int, whole: int) -> str:
    return f"({100.0 * part / whole:.1f}%)" if whole else "(n/a)"


def _cmd_build_lexicon(args) -> int:
    inflections = _load_inflections(args)
    table = prototypes.read_candidates_tsv(args.candidates)
    corpus = selection.read_gold_corpus(args.corpus)
    backend = _open_backend(args)
    oracle = pipeline.BackendQaOracle(backend) if backend else None

    def contextualizer(proto_text: str, instance: selection.GoldInstance) -> str:
        prototype = parse_surface(proto_text, inflections)
        request = pipeline.RoleQuestionRequest(
            tokens=instance.tokens, predicate_index=instance.predicate_index,
            lemma=instance.lemma, sense=instance.sense)
        return pipeline.rule_based_contextualize(prototype, request, inflections)

    lexicon, report = selection.build_and_filter_lexicon(
        table, corpus, contextualizer, oracle,
        threshold=args.threshold, seed=args.seed)
    if backend:
        backend.close()
    _atomic_write(args.out, lambda handle: selection.write_lexicon_tsv(lexicon, handle))
    covered = report.instances_covered
    total = report.instances_total
    print(f"{'lexicon entries':>20}  {len(lexicon)}")
    print(f"{'instances covered':>20}  {covered}/{total}  {_pct(covered, total)}")
    print(f"#stats entries={len(lexicon)} instances_total={total} instances_covered={covered}")
    return EXIT_OK


def _parse_fills(specs):
    fills = {}
    for spec in specs:
        try:
            slot, span = spec.split("=", 1)
            start, end = span.split(":")
            fills[slot.strip()] = (int(start), int(end))
        except ValueError:
            raise ParseError(f"bad --fill {spec!r}; expected SLOT=START:END")
    return fills


def _cmd_generate(args) -> int:
    inflections = _load_inflections(args)
    lexicon = selection.read_lexicon_tsv(args.lexicon)
    tokens = tuple(args.sentence.split())
    if not 0 <= args.pred_index < len(tokens):
        raise DataError("<sentence>", 1, f"predicate index {args.pred_index} out of range")
    request = pipeline.RoleQuestionRequest(
        tokens=tokens, predicate_index=args.pred_index,
        lemma=args.lemma.lower(), sense=args.sense,
        fills=_parse_fills(args.fill))
    core = list(args.role)
    adjuncts: tuple = ()
    if args.all_roles:
        if args.frames:
            inventory = pipeline.read_role_inventory(args.frames)
            core += [role for role, _ in inventory.get((request.lemma, request.sense), [])
                     if not prototypes.is_adjunct(role)]
        else:
            core += [role for (lemma, sense, role) in lexicon.entries
                     if lemma == request.lemma and not prototypes.is_adjunct(role)]
        adjuncts = tuple(r for r in args.adjuncts.split(",") if r)
    backend = _open_backend(args)
    try:
        result = pipeline.generate_role_questions(
            request, lexicon, core, adjuncts, backend, inflections)
    finally:
        if backend:
            backend.close()
    for role in result.questions:
        print(f"{role}\t{result.questions[role]}")
    for role in result.missing:
        print(f"{role}\t<no prototype>")
    for first, second in result.duplicates:
        print(f"# duplicate question for roles {first} and {second}", file=sys.stderr)
    for warning in result.warnings:
        print(f"# warning: {warning}", file=sys.stderr)
    return EXIT_OK


def _cmd_stats(args) -> int:
    totals = {"total": 0, "filled_base": 0, "filled_with_extras": 0}
    frames = 0
    with open(args.input, encoding="utf-8") as handle:
        for number, line in enumerate(handle, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                stats = json.loads(line)["placeholder_stats"]
                for key in totals:
                    totals[key] += int(stats[key])
            except (KeyError, ValueError) as exc:
                raise DataError(args.input, number, str(exc)) from exc
            frames += 1
    total, base, extra = totals["total"], totals["filled_base"], totals["filled_with_extras"]
    print(f"{'frames':>20}  {frames}")
    print(f"{'placeholders':>20}  {total}")
    print(f"{'filled (base)':>20}  {base}  {_pct(base, total)}")
    print(f"{'filled (extras)':>20}  {extra}  {_pct(extra, total)}")
    print(f"#stats frames={frames} placeholders={total} "
          f"filled_base={base} filled_with_extras={extra}")
    return EXIT_OK


_COMMANDS = {
    "parse": _cmd_parse,
    "prototype": _cmd_prototype,
    "readings": _cmd_readings,
    "align": _cmd_align,
    "build-lexicon": _cmd_build_lexicon,
    "generate": _cmd_generate,
    "stats": _cmd_stats,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return _COMMANDS[args.command](args)
    except DataError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except BackendError as exc:
        print(f"backend error: {exc}", file=sys.stderr)
        return EXIT_BACKEND
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except RoleqError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    raise SystemExit(main())
