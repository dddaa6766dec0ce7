"""Acceptance criteria 1-7. Each check records one PASS/FAIL line in the terminal summary."""
import itertools
import json
import time
from collections import Counter
from contextlib import contextmanager
from dataclasses import replace

from helpgen.cli import main
from helpgen.deriv import Internal, Leaf, Sentence, parse_category, select_sentences
from helpgen.genpairs import (
    GenConfig,
    Label,
    Orientation,
    Section,
    generate,
    generate_corpus,
    label_violations,
)
from helpgen.oracle import Unverifiable, to_logical_form, verify_dataset
from helpgen.polarity import (
    DOWN,
    FLAT,
    UP,
    MonotonicityProfile,
    OperatorKind,
    OperatorLexicon,
    compose,
    mark,
)


@contextmanager
def criterion(acceptance, n, text, budget=None):
    start = time.perf_counter()
    ok = False
    try:
        yield
        elapsed = time.perf_counter() - start
        assert budget is None or elapsed < budget, f"took {elapsed:.2f}s, budget {budget}s"
        ok = True
    finally:
        acceptance.append((n, text, ok))
        print(f"{'PASS' if ok else 'FAIL'} criterion {n}: {text}")


def test_criterion_1_golden_polarity(acceptance, by_id, lexicon):
    with criterion(acceptance, 1, "golden polarity annotations", budget=1.0):
        fig1 = mark(by_id["fig1"], lexicon)
        assert fig1.span_polarity("kids") is DOWN
        assert fig1.span_polarity("were dancing on the floor") is UP
        some = mark(by_id["ex1"], lexicon)
        assert some.span_polarity("boys") is UP
        assert some.span_polarity("are happily dancing") is UP
        no = mark(by_id["ex2"], lexicon)
        assert no.span_polarity("boys") is DOWN
        assert no.span_polarity("are happily dancing") is DOWN
        cond = mark(by_id["ex3"], lexicon)
        assert cond.span_polarity("boys") is UP
        assert cond.span_polarity("dancing happily") is UP


TABLE = [
    ("t2-up", "Tom bought some Mexican sunflowers for Mary", "Tom bought some flowers for Mary",
     Label.ENTAILMENT, Section.UP, Orientation.SWAPPED),
    ("t2-down", "If there's no water, there's no whisky", "If there's no facility, there's no whisky",
     Label.ENTAILMENT, Section.DOWN, Orientation.FORWARD),
    ("t2-non", "Shakespeare wrote both tragedy and comedy",
     "Shakespeare wrote both tragedy and drama", Label.NEUTRAL, Section.NON, Orientation.FORWARD),
    ("t2-conj", "Tom removed his glasses", "Tom removed his glasses and rubbed his eyes",
     Label.NEUTRAL, Section.CONJ, Orientation.SWAPPED),
    ("t2-disj", "The trees are barren", "The trees are barren or bear only small fruit",
     Label.ENTAILMENT, Section.DISJ, Orientation.SWAPPED),
]


def test_criterion_2_golden_pairs(acceptance, by_id, lexicon, tax):
    with criterion(acceptance, 2, "every golden table row is generated", budget=1.0):
        for sid, premise, hypothesis, label, section, orientation in TABLE:
            pairs = generate(by_id[sid], lexicon, tax)
            hits = [p for p in pairs if (p.premise, p.hypothesis) == (premise, hypothesis)]
            assert len(hits) == 1, sid
            p = hits[0]
            assert (p.label, p.section, p.orientation) == (label, section, orientation), sid


def test_criterion_3_oracle_soundness(acceptance, corpus, lexicon, tax):
    with criterion(acceptance, 3, "0 disagreements at d=3, crisp fraction >= 80%", budget=60.0):
        selected = select_sentences(corpus, lexicon)
        derivations = {}
        pairs = generate_corpus(selected, lexicon, tax, GenConfig(), Counter(), derivations)
        assert len(selected) >= 50 and len(pairs) >= 300
        report = verify_dataset(pairs, selected, lexicon, tax, 3, derivations=derivations)
        assert report.disagreements == []
        assert report.crisp_fraction >= 0.8, report.crisp_fraction


def test_criterion_4_algebra(acceptance, corpus, lexicon):
    with criterion(acceptance, 4, "compose laws and double flip", budget=1.0):
        values = (UP, DOWN, FLAT)
        for a, b, c in itertools.product(values, repeat=3):
            assert compose(a, compose(b, c)) is compose(compose(a, b), c)
        for a in values:
            assert compose(UP, a) is a is compose(a, UP)
        assert compose(DOWN, DOWN) is UP

        lex = OperatorLexicon()
        for (lemma, tag), prof in lexicon:
            lex.add(lemma, tag, prof)
        lex.add("it-is-not-the-case", "NEG", MonotonicityProfile(OperatorKind.VP_NEGATOR, (DOWN,)))
        neg = Leaf("not", "it-is-not-the-case", "x", "NEG", None, parse_category("S/S"))
        flip = {UP: DOWN, DOWN: UP, FLAT: FLAT}
        for s in corpus:
            once = Sentence(s.id, Internal("fa", s.root.category, (neg, s.root)))
            twice = Sentence(s.id, Internal("fa", s.root.category, (neg, once.root)))
            m0, m1, m2 = mark(s, lex), mark(once, lex), mark(twice, lex)
            for path, _, m in m0.nodes():
                assert m1.marks[(1,) + path].polarity is flip[m.polarity]
                assert m2.marks[(1, 1) + path].polarity is m.polarity


def test_criterion_5_label_invariants(acceptance, corpus, lexicon, tax):
    with criterion(acceptance, 5, "label-calculus invariants, zero violations"):
        pairs = generate_corpus(select_sentences(corpus, lexicon), lexicon, tax)
        assert label_violations(pairs) == []
        forward = Counter((p.source_id, p.premise, p.hypothesis) for p in pairs
                          if p.orientation is Orientation.FORWARD)
        swapped = Counter((p.source_id, p.hypothesis, p.premise) for p in pairs
                          if p.orientation is Orientation.SWAPPED)
        assert forward == swapped


def test_criterion_6_determinism(acceptance, tmp_path):
    with criterion(acceptance, 6, "two CLI runs are byte-identical"):
        outputs = []
        for name in ("first", "second"):
            out = tmp_path / name / "help.jsonl"
            out.parent.mkdir()
            assert main(["--out", str(out), "--verify", "--jobs", "1"]) == 0
            report = out.with_name("help.jsonl.report.json")
            outputs.append((out.read_bytes(), report.read_bytes()))
        assert outputs[0] == outputs[1]


FIXTURE = ["fig1", "ex2", "t2-up", "t2-down", "t2-non", "t2-conj", "t1-down", "g10"]


def test_criterion_7_mutation_sensitivity(acceptance, by_id, lexicon, tax, tmp_path):
    with criterion(acceptance, 7, "every single label flip is caught, exit code 2"):
        sentences = [by_id[s] for s in FIXTURE]
        derivations = {}
        pairs = generate_corpus(sentences, lexicon, tax, GenConfig(), Counter(), derivations)
        crisp = []
        for p in pairs:
            try:
                to_logical_form(derivations[p.premise], lexicon)
                to_logical_form(derivations[p.hypothesis], lexicon)
            except Unverifiable:
                continue
            crisp.append(p)
        assert len(crisp) >= 40
        for victim in crisp:
            flipped = Label.NEUTRAL if victim.label is Label.ENTAILMENT else Label.ENTAILMENT
            bad = [replace(p, label=flipped) if p is victim else p for p in crisp]
            report = verify_dataset(bad, sentences, lexicon, tax, 3, derivations=derivations)
            assert [d["pair_id"] for d in report.disagreements] == [victim.pair_id]
            if flipped is Label.ENTAILMENT:
                assert report.disagreements[0]["countermodel"]["domain"]

        dataset = tmp_path / "fixture.jsonl"
        victim = next(p for p in crisp if p.label is Label.NEUTRAL)
        records = [replace(p, label=Label.ENTAILMENT) if p is victim else p for p in crisp]
        dataset.write_text("".join(json.dumps(r.to_json()) + "\n" for r in records))
        assert main(["--check", str(dataset)]) == 2

