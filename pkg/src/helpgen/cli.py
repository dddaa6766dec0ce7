"""Command-line batch driver: select, mark, generate, optionally verify, and report."""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Sequence

from .deriv import CorpusError, Sentence, read_corpus, select_sentences
from .genpairs import GenConfig, InferencePair, Section, generate
from .oracle import verify_dataset
from .polarity import LexiconError, OperatorLexicon
from .taxonomy import Taxonomy, TaxonomyError

TSV_COLUMNS = ("pair_id", "premise", "hypothesis", "label", "section", "replacement_kind",
               "direction", "orientation", "source_id")
# below this many sentences a process pool costs more than it saves
PARALLEL_THRESHOLD = 500


class InputError(Exception):
    pass


@dataclass
class RunConfig:
    corpus: Path | None
    lexicon: Path | None
    taxonomy: Path | None
    out: Path
    format: str = "jsonl"
    verify: bool = False
    domain_size: int = 3
    gen: GenConfig = field(default_factory=GenConfig)
    tier: str = "both"
    report: Path | None = None
    jobs: int = 1

    def __post_init__(self):
        for name in ("corpus", "lexicon", "taxonomy"):
            p = getattr(self, name)
            if p is not None and not Path(p).is_file():
                raise InputError(f"{name} file not found: {p}")
        if not 1 <= self.domain_size <= 4:
            raise InputError("--domain-size must be between 1 and 4")
        if self.gen.max_depth < 1:
            raise InputError("--max-depth must be at least 1")
        if self.format not in ("jsonl", "tsv"):
            raise InputError(f"unknown format {self.format!r}")

    @property
    def report_path(self) -> Path:
        return self.report or self.out.with_name(self.out.name + ".report.json")


@dataclass
class RunReport:
    total: int = 0
    sections: dict[str, int] = field(default_factory=dict)
    labels: dict[str, int] = field(default_factory=dict)
    vocabulary_size: int = 0
    skipped: dict[str, int] | None = None
    verification: dict | None = None

    @classmethod
    def from_pairs(cls, pairs: Sequence[InferencePair]) -> "RunReport":
        sections = {s.value: 0 for s in Section}
        labels = {"entailment": 0, "neutral": 0}
        vocab: set[str] = set()
        for p in pairs:
            sections[p.section.value] += 1
            labels[p.label.value] += 1
            vocab.update(p.premise.split())
            vocab.update(p.hypothesis.split())
        return cls(total=len(pairs), sections=sections, labels=labels, vocabulary_size=len(vocab))

    def dataset_summary(self) -> dict:
        return {"total": self.total, "sections": self.sections, "labels": self.labels,
                "vocabulary_size": self.vocabulary_size}

    def to_json(self) -> dict:
        out = self.dataset_summary()
        if self.skipped is not None:
            out["skipped"] = dict(sorted(self.skipped.items()))
        if self.verification is not None:
            out["verification"] = self.verification
        return out


# ---------------------------------------------------------------------------
# dataset io

def write_dataset(pairs: Sequence[InferencePair], path: Path, fmt: str) -> None:
    buf = io.StringIO(newline="")
    if fmt == "jsonl":
        for p in pairs:
            buf.write(json.dumps(p.to_json(), ensure_ascii=False) + "\n")
    else:
        w = csv.writer(buf, delimiter="\t", lineterminator="\n")
        w.writerow(TSV_COLUMNS)
        for p in pairs:
            rec = p.to_json()
            w.writerow([rec[c] for c in TSV_COLUMNS])
    path.write_text(buf.getvalue(), encoding="utf-8", newline="")


def read_dataset(path: Path) -> list[InferencePair]:
    """Read a dataset in either format, judged by the file suffix."""
    try:
        text = Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as e:
        raise InputError(f"{path}: {e}") from None
    pairs = []
    if Path(path).suffix == ".tsv":
        rows = csv.reader(io.StringIO(text, newline=""), delimiter="\t")
        header = next(rows, None)
        if header is None:
            return []
        if tuple(header) != TSV_COLUMNS:
            raise InputError(f"{path}: unexpected TSV header")
        for n, row in enumerate(rows, start=1):
            try:
                pairs.append(InferencePair.from_json(dict(zip(TSV_COLUMNS, row, strict=True))))
            except (KeyError, ValueError) as e:
                raise InputError(f"{path}: record {n}: {e}") from None
        return pairs
    n = 0
    for line in text.splitlines():
        if not line.strip():
            continue
        n += 1
        try:
            pairs.append(InferencePair.from_json(json.loads(line)))
        except (KeyError, ValueError, TypeError) as e:
            raise InputError(f"{path}: record {n}: {e}") from None
    return pairs


def stats(path: Path) -> RunReport:
    return RunReport.from_pairs(read_dataset(path))


# ---------------------------------------------------------------------------
# pipeline

def _load_inputs(cfg: RunConfig) -> tuple[list[Sentence], OperatorLexicon, Taxonomy]:
    try:
        lexicon = OperatorLexicon.load(cfg.lexicon)
    except LexiconError as e:
        raise InputError(f"lexicon: {e}") from None
    try:
        tax = Taxonomy.load(cfg.taxonomy)
    except TaxonomyError as e:
        raise InputError(f"taxonomy: {e}") from None
    try:
        if cfg.corpus is None:
            with resources.files("helpgen.data").joinpath("corpus.jsonl").open("rb") as f:
                corpus = read_corpus(f)
        else:
            with open(cfg.corpus, "rb") as f:
                corpus = read_corpus(f)
    except CorpusError as e:
        raise InputError(f"corpus: {e}") from None
    if cfg.tier != "both":
        corpus = [s for s in corpus if s.source_tier == cfg.tier]
    return select_sentences(corpus, lexicon), lexicon, tax


def _generate_one(args):
    sentence, lexicon, tax, gen = args
    skipped: Counter = Counter()
    derivations: dict[str, Sentence] = {}
    pairs = generate(sentence, lexicon, tax, gen, skipped, derivations)
    return pairs, skipped, derivations


def run(cfg: RunConfig) -> int:
    corpus, lexicon, tax = _load_inputs(cfg)
    work = [(s, lexicon, tax, cfg.gen) for s in corpus]
    if cfg.jobs > 1 and len(corpus) >= PARALLEL_THRESHOLD:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as ex:
            results = list(ex.map(_generate_one, work, chunksize=32))
    else:
        results = [_generate_one(w) for w in work]
    pairs: list[InferencePair] = []
    skipped: Counter = Counter()
    derivations: dict[str, Sentence] = {}
    for ps, sk, dv in results:  # source order, then pair id within a sentence
        pairs.extend(ps)
        skipped.update(sk)
        for text, s in dv.items():
            derivations.setdefault(text, s)
    report = RunReport.from_pairs(pairs)
    report.skipped = dict(skipped)
    code = 0
    if cfg.verify:
        vr = verify_dataset(pairs, corpus, lexicon, tax, cfg.domain_size, cfg.gen, derivations)
        report.verification = vr.to_json()
        if vr.disagreements:
            code = 2
    write_dataset(pairs, cfg.out, cfg.format)
    cfg.report_path.write_text(json.dumps(report.to_json(), indent=2, ensure_ascii=False) + "\n",
                               encoding="utf-8")
    return code


def check(cfg: RunConfig, dataset: Path) -> int:
    """Verify the labels of an existing dataset file against the oracle."""
    corpus, lexicon, tax = _load_inputs(cfg)
    pairs = read_dataset(dataset)
    vr = verify_dataset(pairs, corpus, lexicon, tax, cfg.domain_size, cfg.gen)
    out = cfg.report or dataset.with_name(dataset.name + ".check.json")
    out.write_text(json.dumps(vr.to_json(), indent=2, ensure_ascii=False) + "\n",
                               encoding="utf-8")
    for d in vr.disagreements:
        print(f"disagreement {d['pair_id']}: labelled {d['label']}, oracle {d['verdict']}",
              file=sys.stderr)
    return 2 if vr.disagreements else 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="helpgen", description=__doc__)
    p.add_argument("--corpus", type=Path, help="derivation corpus (JSON Lines); default: bundled")
    p.add_argument("--lexicon", type=Path, help="operator lexicon (JSON); default: bundled")
    p.add_argument("--taxonomy", type=Path, help="sense taxonomy (JSON Lines); default: bundled")
    p.add_argument("--out", type=Path, default=Path("help.jsonl"), help="dataset output path")
    p.add_argument("--format", choices=("jsonl", "tsv"), default="jsonl")
    p.add_argument("--report", type=Path,
                   help="report path; default: OUT.report.json, or DATASET.check.json with --check")
    p.add_argument("--verify", action="store_true", help="check labels with the model oracle")
    p.add_argument("--domain-size", type=int, default=3, metavar="N",
                   help="largest model domain for verification (1-4)")
    p.add_argument("--no-lexical", action="store_true")
    p.add_argument("--no-elimination", action="store_true")
    p.add_argument("--no-swap", action="store_true")
    p.add_argument("--max-depth", type=int, default=1, metavar="N",
                   help="taxonomy steps allowed per substitution")
    p.add_argument("--max-pairs", type=int, metavar="N", help="cap on pairs per sentence")
    p.add_argument("--tier", choices=("gold", "silver", "both"), default="both")
    p.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    p.add_argument("--stats", type=Path, metavar="FILE",
                   help="print counts for an existing dataset and exit")
    p.add_argument("--check", type=Path, metavar="DATASET",
                   help="verify the labels of an existing dataset and exit")
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.stats is not None:
            if not args.stats.is_file():
                raise InputError(f"dataset file not found: {args.stats}")
            print(json.dumps(stats(args.stats).dataset_summary(), indent=2))
            return 0
        gen = GenConfig(max_depth=args.max_depth, lexical=not args.no_lexical,
                        elimination=not args.no_elimination, swap=not args.no_swap,
                        max_pairs=args.max_pairs)
        cfg = RunConfig(corpus=args.corpus, lexicon=args.lexicon, taxonomy=args.taxonomy,
                        out=args.out, format=args.format, verify=args.verify,
                        domain_size=args.domain_size, gen=gen, tier=args.tier,
                        report=args.report, jobs=args.jobs)
        if args.check is not None:
            if not args.check.is_file():
                raise InputError(f"dataset file not found: {args.check}")
            return check(cfg, args.check)
        return run(cfg)
    except (InputError, OSError) as e:
        print(f"helpgen: error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
