import itertools
from collections import Counter
from dataclasses import replace
from functools import lru_cache

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpgen.deriv import select_sentences
from helpgen.genpairs import GenConfig, Label, generate, generate_corpus
from helpgen.oracle import (
    Atom,
    Compl,
    Conditional,
    Model,
    ModelError,
    Negation,
    Quantified,
    TaxonomyMismatch,
    Top,
    Unverifiable,
    atoms_of,
    check_entailment,
    eval,
    inter,
    is_admissible,
    rescale,
    to_logical_form,
    union,
    verify_dataset,
)
from helpgen.polarity import DOWN, UP
from helpgen.taxonomy import Direction, Taxonomy

KID, FOSTER, DANCE = Atom("kid.n.01"), Atom("foster_child.n.01"), Atom("dance.v.01")
BOY, SCHOOLBOY, TOM = Atom("boy.n.01"), Atom("schoolboy.n.01"), Atom("name:tom")


def _rec(sense, hypernyms=()):
    lemma, pos, _ = sense.split(".")
    return {"sense": sense, "lemma": lemma, "pos": pos, "gloss": [], "hypernyms": list(hypernyms)}


@pytest.fixture(scope="module")
def small():
    return _small()


@lru_cache(maxsize=None)
def _small():
    return Taxonomy.from_records([
        _rec("kid.n.01"), _rec("foster_child.n.01", ["kid.n.01"]),
        _rec("boy.n.01"), _rec("schoolboy.n.01", ["boy.n.01"]), _rec("dance.v.01"),
    ])


def _model(**ext):
    dom = frozenset().union(*ext.values()) if ext else frozenset()
    return Model(frozenset(dom | {"e0"}), {k: frozenset(v) for k, v in ext.items()})


# --- to_logical_form -----------------------------------------------------------

def _derivations(corpus, lexicon, tax):
    out = {}
    generate_corpus(select_sentences(corpus, lexicon), lexicon, tax, GenConfig(), Counter(), out)
    return out


@pytest.fixture(scope="module")
def derivations(corpus, lexicon, tax):
    return _derivations(corpus, lexicon, tax)


def test_reading_of_a_dropped_modifier(derivations, lexicon):
    lf = to_logical_form(derivations["All kids were dancing"], lexicon)
    assert lf == Quantified("all", KID, DANCE)


def test_reading_with_adverb_is_an_intersection(by_id, lexicon):
    lf = to_logical_form(by_id["ex2"], lexicon)
    assert lf.q == "no" and lf.restrictor == BOY
    assert set(lf.body.parts) == {DANCE, Atom("happily:r")}


def test_reading_of_conditional_and_negation(by_id, lexicon):
    lf = to_logical_form(by_id["ex3"], lexicon)
    assert isinstance(lf, Conditional)
    assert lf.antecedent.q == "no" and lf.consequent.q == "some"
    vp_not = to_logical_form(by_id["g07"], lexicon)  # Some doctors did not drink coffee
    assert vp_not.q == "some" and isinstance(vp_not.body, Compl)


def test_reading_of_disjunction_and_names(by_id, lexicon):
    lf = to_logical_form(by_id["g10"], lexicon)  # Tom drank wine or beer
    assert lf.q == "all" and lf.restrictor == TOM
    assert str(lf.body) == "drink.v.01[(beer.n.01 | wine.n.01)]"


def test_at_most_reading(by_id, lexicon):
    lf = to_logical_form(by_id["t1-down"], lexicon)
    assert lf.q == "at_most" and lf.n == 10


@pytest.mark.parametrize("sid", ["q01", "q02", "q03", "t2-disj"])
def test_outside_fragment_is_unverifiable(by_id, lexicon, sid):
    with pytest.raises(Unverifiable):
        to_logical_form(by_id[sid], lexicon)


def test_reading_is_deterministic(corpus, lexicon):
    for s in corpus:
        try:
            assert to_logical_form(s, lexicon) == to_logical_form(s, lexicon)
        except Unverifiable:
            pass


# --- eval ---------------------------------------------------------------------------

def test_eval_examples():
    m = Model(frozenset({"a"}), {"kid.n.01": frozenset({"a"}), "dance.v.01": frozenset({"a"})})
    assert eval(Quantified("all", KID, DANCE), m)
    m2 = Model(frozenset({"a"}), {"boy.n.01": frozenset({"a"}), "dance.v.01": frozenset()})
    assert not eval(Quantified("some", BOY, DANCE), m2)
    com, spend = Atom("commissioner.n.01"), Atom("spend.v.01")
    people = {f"p{i}" for i in range(5)}
    m3 = Model(frozenset(people), {"commissioner.n.01": frozenset(people),
                                   "spend.v.01": frozenset({"p0", "p1", "p2"})})
    assert eval(Quantified("at_most", com, spend, 10), m3)
    assert not eval(Quantified("at_most", com, spend, 2), m3)


def test_eval_quantifier_table():
    m = _model(**{"boy.n.01": {"a", "b"}, "dance.v.01": {"a", "b", "c"}})
    assert eval(Quantified("both", BOY, DANCE), m)
    assert not eval(Quantified("both", DANCE, BOY), m)
    assert eval(Quantified("no", BOY, Compl(DANCE)), m)
    assert eval(Negation(Quantified("all", DANCE, BOY)), m)
    assert eval(Conditional(Quantified("all", DANCE, BOY), Quantified("no", BOY, DANCE)), m)


def test_eval_missing_predicate():
    with pytest.raises(ModelError):
        eval(Quantified("all", KID, DANCE), _model(**{"kid.n.01": {"a"}}))


def test_expression_builders_normalise():
    assert inter(DANCE, inter(KID, DANCE)) == inter(KID, DANCE)
    assert inter(Top(), KID) == KID
    assert union(KID, union(DANCE, KID)) == union(DANCE, KID)


# --- check_entailment ---------------------------------------------------------------

def test_narrowing_restrictor_of_all_is_entailed(small):
    v = check_entailment(Quantified("all", KID, DANCE), Quantified("all", FOSTER, DANCE), small, 3)
    assert v.entailed and v.countermodel is None


def test_explicit_countermodel(small):
    v = check_entailment(Quantified("some", BOY, DANCE), Quantified("some", SCHOOLBOY, DANCE),
                         small, 2)
    assert not v.entailed
    m = v.countermodel
    assert m.domain == {"e0"}
    assert m.extension == {"boy.n.01": {"e0"}, "dance.v.01": {"e0"}, "schoolboy.n.01": set()}


def test_reflexivity(small):
    p = Quantified("some", BOY, DANCE)
    assert check_entailment(p, p, small, 1).entailed


def test_unknown_sense_is_a_mismatch(small):
    with pytest.raises(TaxonomyMismatch):
        check_entailment(Quantified("all", KID, DANCE),
                         Quantified("all", Atom("unicorn.n.01"), DANCE), small)
    with pytest.raises(ValueError):
        check_entailment(Quantified("all", KID, DANCE), Quantified("all", KID, DANCE), small, 0)


def test_at_most_bounds_are_rescaled_below_the_domain_bound(small):
    ten = Quantified("at_most", BOY, DANCE, 10)
    assert rescale(ten, 3) == Quantified("at_most", BOY, DANCE, 2)
    assert rescale(Quantified("at_most", BOY, DANCE, 1), 3).n == 1
    narrower = Quantified("at_most", SCHOOLBOY, DANCE, 10)
    assert check_entailment(ten, narrower, small, 3).entailed
    assert not check_entailment(narrower, ten, small, 3).entailed


def test_names_denote_singletons(small):
    p = Quantified("all", TOM, DANCE)
    assert check_entailment(p, Quantified("some", TOM, DANCE), small, 3).entailed
    assert not check_entailment(Quantified("all", BOY, DANCE), Quantified("some", BOY, DANCE),
                                small, 3).entailed


# --- the brute-force scalar route ---------------------------------------------------

UNIVERSE = (BOY, SCHOOLBOY, DANCE, TOM)


@lru_cache(maxsize=None)
def _all_models(d):
    """Every admissible labelled model over UNIVERSE with 1..d individuals."""
    out = []
    for size in range(1, d + 1):
        dom = [f"e{i}" for i in range(size)]
        subsets = [frozenset(c) for r in range(size + 1) for c in itertools.combinations(dom, r)]
        for exts in itertools.product(subsets, repeat=len(UNIVERSE)):
            m = Model(frozenset(dom), {str(a): e for a, e in zip(UNIVERSE, exts)})
            if is_admissible(m, _small(), UNIVERSE):
                out.append(m)
    return out


def _brute(p, h, d):
    p, h = rescale(p, d), rescale(h, d)
    return not any(eval(p, m) and not eval(h, m) for m in _all_models(d))


preds = st.recursive(
    st.sampled_from(UNIVERSE + (Top(),)),
    lambda sub: st.one_of(
        st.builds(lambda a, b: inter(a, b), sub, sub),
        st.builds(lambda a, b: union(a, b), sub, sub),
        st.builds(Compl, sub),
    ),
    max_leaves=3,
)


def _quantified(q, r, b, n):
    return Quantified(q, r, b, n if q == "at_most" else None)


# at_most bounds stay below d - 1 so that rescaling never changes them
forms = st.recursive(
    st.builds(_quantified, st.sampled_from(["all", "some", "no", "both", "at_most"]),
              preds, preds, st.integers(0, 1)),
    lambda sub: st.one_of(st.builds(Negation, sub), st.builds(Conditional, sub, sub)),
    max_leaves=2,
)


@settings(max_examples=150, deadline=None)
@given(forms, forms)
def test_vectorized_and_scalar_routes_agree(p, h):
    v = check_entailment(p, h, _small(), 2)
    assert v.entailed == _brute(p, h, 2)
    if not v.entailed:
        m = v.countermodel
        assert eval(p, m) and not eval(h, m)
        assert is_admissible(m, _small(), sorted(atoms_of(p) | atoms_of(h), key=str))


@settings(max_examples=25, deadline=None)
@given(forms, forms)
def test_routes_agree_on_three_individuals(p, h):
    assert check_entailment(p, h, _small(), 3).entailed == _brute(p, h, 3)


@settings(max_examples=100, deadline=None)
@given(forms, forms)
def test_larger_domains_never_restore_entailment(p, h):
    verdicts = [check_entailment(p, h, _small(), d).entailed for d in (2, 3)]
    assert verdicts[1] <= verdicts[0]


@settings(max_examples=100, deadline=None)
@given(forms, forms)
def test_mutual_entailment_means_equivalence(p, h):
    tax = _small()
    if check_entailment(p, h, tax, 2).entailed and check_entailment(h, p, tax, 2).entailed:
        assert all(eval(rescale(p, 2), m) == eval(rescale(h, 2), m) for m in _all_models(2))


# --- monotonicity over the bundled corpus ---------------------------------------------

def _closure(m, atoms, tax):
    from helpgen.oracle import is_name, pred_leq
    ext = dict(m)
    changed = True
    while changed:
        changed = False
        for a, b in itertools.permutations(atoms, 2):
            if pred_leq(a, b, tax) and not ext[str(a)] <= ext[str(b)]:
                ext[str(b)] = ext[str(b)] | ext[str(a)]
                changed = True
    for a in atoms:
        if is_name(a):
            ext[str(a)] = frozenset(sorted(ext[str(a)])[:1] or ["e0"])
    return ext


@pytest.fixture(scope="module")
def monotone_pairs(corpus, lexicon, tax):
    derivations = {}
    pairs = generate_corpus(select_sentences(corpus, lexicon), lexicon, tax,
                            GenConfig(swap=False), Counter(), derivations)
    out = []
    for p in pairs:
        if (p.site_polarity, p.direction) not in ((UP, Direction.BROADEN),
                                                  (DOWN, Direction.NARROW)):
            continue
        try:
            out.append((to_logical_form(derivations[p.premise], lexicon),
                        to_logical_form(derivations[p.hypothesis], lexicon)))
        except Unverifiable:
            pass
    assert len(out) > 100
    return out


def test_monotone_substitution_preserves_truth(monotone_pairs, tax):
    @settings(max_examples=300, deadline=None)
    @given(st.sampled_from(monotone_pairs), st.data())
    def check(pair, data):
        fp, fh = rescale(pair[0], 3), rescale(pair[1], 3)
        atoms = sorted(atoms_of(fp) | atoms_of(fh), key=str)
        size = data.draw(st.integers(1, 3))
        dom = [f"e{i}" for i in range(size)]
        raw = {str(a): frozenset(data.draw(st.sets(st.sampled_from(dom)))) for a in atoms}
        ext = _closure(raw, atoms, tax)
        m = Model(frozenset(dom), ext)
        if not is_admissible(m, tax, atoms):
            return
        assert not eval(fp, m) or eval(fh, m)

    check()


# --- verify_dataset -------------------------------------------------------------------

def test_empty_dataset(corpus, lexicon, tax):
    report = verify_dataset([], corpus, lexicon, tax)
    assert report.total == 0 and report.disagreements == [] and report.unverifiable == []
    assert report.to_json()["totals"]["pairs"] == 0


def test_bundled_crisp_subset_agrees(corpus, lexicon, tax, derivations):
    pairs = generate_corpus(select_sentences(corpus, lexicon), lexicon, tax)
    report = verify_dataset(pairs, corpus, lexicon, tax, 3, derivations=derivations)
    assert report.disagreements == []
    assert report.verified == report.agreements > 0
    assert report.verified + len(report.unverifiable) == report.total
    assert all(u["reason"] for u in report.unverifiable)


def test_corrupted_label_is_caught(by_id, lexicon, tax):
    derivations = {}
    pairs = generate(by_id["fig1"], lexicon, tax, GenConfig(), Counter(), derivations)
    target = next(p for p in pairs if p.site_polarity is UP and p.direction is Direction.NARROW)
    assert target.label is Label.NEUTRAL
    bad = [replace(p, label=Label.ENTAILMENT) if p is target else p for p in pairs]
    report = verify_dataset(bad, [by_id["fig1"]], lexicon, tax, 3, derivations=derivations)
    assert len(report.disagreements) == 1
    dis = report.disagreements[0]
    assert dis["pair_id"] == target.pair_id and dis["countermodel"]["domain"]
    # regenerating the derivations gives the same outcome
    again = verify_dataset(bad, [by_id["fig1"]], lexicon, tax, 3)
    assert again.to_json() == report.to_json()


def test_unknown_strings_are_unverifiable(by_id, lexicon, tax):
    pairs = generate(by_id["fig1"], lexicon, tax)
    odd = replace(pairs[0], premise="Something nobody generated")
    report = verify_dataset([odd], [by_id["fig1"]], lexicon, tax)
    assert report.unverifiable == [{"pair_id": odd.pair_id, "reason": "no derivation for sentence"}]
