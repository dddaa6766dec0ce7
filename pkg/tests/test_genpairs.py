from collections import Counter

import pytest

from helpgen.deriv import leaves, select_sentences
from helpgen.genpairs import (
    DegenerateElimination,
    GenConfig,
    InferencePair,
    Label,
    LexicalPayload,
    Orientation,
    Replacement,
    ReplacementKind,
    Section,
    apply_replacement,
    assign_label,
    classify_section,
    edit_span,
    fill_senses,
    generate,
    generate_corpus,
    label_violations,
    lexical_payload,
)
from helpgen.polarity import DOWN, FLAT, UP, SiteKind, find_sites, mark
from helpgen.taxonomy import Direction

B, NW = Direction.BROADEN, Direction.NARROW


def _sites(sentence, lexicon):
    return find_sites(mark(sentence, lexicon), lexicon)


def _site(sentence, lexicon, kind, text, side=None):
    for s in _sites(sentence, lexicon):
        if s.kind is kind and " ".join(lf.token for lf in leaves(s.node)) == text \
                and (side is None or s.side == side):
            return s
    raise LookupError(text)


def _pairs(sentence, lexicon, tax, **cfg):
    return generate(sentence, lexicon, tax, GenConfig(**cfg))


def _find(pairs, premise, hypothesis):
    hits = [p for p in pairs if p.premise == premise and p.hypothesis == hypothesis]
    assert len(hits) == 1, (premise, hypothesis, [(p.premise, p.hypothesis) for p in pairs])
    return hits[0]


# --- label calculus -----------------------------------------------------------

@pytest.mark.parametrize("pol, direction, label", [
    (UP, B, Label.ENTAILMENT), (DOWN, NW, Label.ENTAILMENT),
    (UP, NW, Label.NEUTRAL), (DOWN, B, Label.NEUTRAL),
    (FLAT, B, Label.NEUTRAL), (FLAT, NW, Label.NEUTRAL),
])
def test_assign_label(pol, direction, label):
    assert assign_label(pol, direction) is label


def test_elimination_direction_is_fixed(by_id, lexicon):
    mod = _site(by_id["fig1"], lexicon, SiteKind.MODIFIER, "on the floor")
    with pytest.raises(ValueError):
        Replacement(mod, NW, mod.node)
    disj = _site(by_id["t2-disj"], lexicon, SiteKind.DISJUNCT, "or bear only small fruit")
    with pytest.raises(ValueError):
        Replacement(disj, B, disj.node)


def test_classify_section(by_id, lexicon):
    water = _site(by_id["t2-down"], lexicon, SiteKind.LEXICAL_HEAD, "water")
    assert classify_section(water, ReplacementKind.LEXICAL) is Section.DOWN
    flowers = _site(by_id["t2-up"], lexicon, SiteKind.LEXICAL_HEAD, "flowers")
    assert classify_section(flowers, ReplacementKind.LEXICAL) is Section.UP
    disj = _site(by_id["t2-disj"], lexicon, SiteKind.DISJUNCT, "or bear only small fruit")
    assert classify_section(disj, ReplacementKind.ELIMINATION) is Section.DISJ
    comedy = _site(by_id["t2-non"], lexicon, SiteKind.LEXICAL_HEAD, "comedy")
    assert classify_section(comedy, ReplacementKind.LEXICAL) is Section.NON
    conj = _site(by_id["t2-non"], lexicon, SiteKind.CONJUNCT, "and comedy")
    assert classify_section(conj, ReplacementKind.ELIMINATION) is Section.CONJ


# --- apply_replacement ----------------------------------------------------------

def test_lexical_replacement_reinflects(by_id, lexicon, tax):
    fig1 = by_id["fig1"]
    kids = _site(fig1, lexicon, SiteKind.LEXICAL_HEAD, "kids")
    payload = lexical_payload(kids.node, "foster_child.n.01", tax)
    assert payload == LexicalPayload("foster_child.n.01", "foster_child", "foster children")
    out = apply_replacement(fig1, Replacement(kids, NW, payload))
    assert out.text == "All foster children were dancing on the floor"
    assert out.leaves()[1].sense == "foster_child.n.01"


def test_modifier_drop(by_id, lexicon):
    fig1 = by_id["fig1"]
    mod = _site(fig1, lexicon, SiteKind.MODIFIER, "on the floor")
    assert apply_replacement(fig1, Replacement(mod, B, mod.node)).text == "All kids were dancing"


def test_conjunct_drops(by_id, lexicon):
    s = by_id["t2-conj"]
    right = _site(s, lexicon, SiteKind.CONJUNCT, "and rubbed his eyes")
    left = _site(s, lexicon, SiteKind.CONJUNCT, "removed his glasses")
    assert apply_replacement(s, Replacement(right, B, right.node)).text == "Tom removed his glasses"
    assert apply_replacement(s, Replacement(left, B, left.node)).text == "Tom rubbed his eyes"


def test_initial_capital_restored(by_id, lexicon):
    s = by_id["g34"]  # Some boys and girls ...
    sites = [x for x in _sites(s, lexicon) if x.kind is SiteKind.LEXICAL_HEAD]
    assert sites
    drop_left = _site(s, lexicon, SiteKind.CONJUNCT, "boys")
    out = apply_replacement(s, Replacement(drop_left, B, drop_left.node))
    assert out.text == "Some girls were swimming in the lake"
    ex = by_id["t2-disj"]
    left = _site(ex, lexicon, SiteKind.DISJUNCT, "are barren")
    assert apply_replacement(ex, Replacement(left, NW, left.node)).text \
        == "The trees bear only small fruit"


def test_replacement_must_belong_to_sentence(by_id, lexicon, tax):
    kids = _site(by_id["fig1"], lexicon, SiteKind.LEXICAL_HEAD, "kids")
    payload = lexical_payload(kids.node, "person.n.01", tax)
    with pytest.raises(ValueError, match="does not belong"):
        apply_replacement(by_id["g05"], Replacement(kids, B, payload))


def test_pos_mismatch_rejected(by_id, lexicon):
    kids = _site(by_id["fig1"], lexicon, SiteKind.LEXICAL_HEAD, "kids")
    with pytest.raises(ValueError, match="pos"):
        apply_replacement(by_id["fig1"],
                          Replacement(kids, B, LexicalPayload("dance.v.01", "dance", "dance")))


def test_argument_cannot_be_dropped_as_modifier(by_id, lexicon):
    from dataclasses import replace
    fig1 = by_id["fig1"]
    kids = _site(fig1, lexicon, SiteKind.LEXICAL_HEAD, "kids")
    fake = replace(kids, kind=SiteKind.MODIFIER)
    with pytest.raises(DegenerateElimination):
        apply_replacement(fig1, Replacement(fake, B, fake.node))


def test_edit_span():
    assert edit_span("All kids were dancing on the floor", "All kids were dancing") == (4, 7, 4, 4)
    assert edit_span("a b c", "a x c") == (1, 2, 1, 2)
    assert edit_span("a b", "a b") is None


# --- generate ---------------------------------------------------------------------

def test_fig1_steps_3_and_4(by_id, lexicon, tax):
    pairs = _pairs(by_id["fig1"], lexicon, tax)
    orig = "All kids were dancing on the floor"
    h1, h2 = "All foster children were dancing on the floor", "All kids were dancing"
    assert _find(pairs, orig, h1).label is Label.ENTAILMENT
    assert _find(pairs, orig, h2).label is Label.ENTAILMENT
    back1 = _find(pairs, h1, orig)
    back2 = _find(pairs, h2, orig)
    assert back1.label is Label.NEUTRAL and back1.orientation is Orientation.SWAPPED
    assert back2.label is Label.NEUTRAL and back2.direction is NW


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


@pytest.mark.parametrize("sid, premise, hypothesis, label, section, orientation", TABLE)
def test_table_rows(by_id, lexicon, tax, sid, premise, hypothesis, label, section, orientation):
    p = _find(_pairs(by_id[sid], lexicon, tax), premise, hypothesis)
    assert (p.label, p.section, p.orientation) == (label, section, orientation)


def test_up_row_forward_is_neutral(by_id, lexicon, tax):
    pairs = _pairs(by_id["t2-up"], lexicon, tax)
    fwd = _find(pairs, "Tom bought some flowers for Mary",
                "Tom bought some Mexican sunflowers for Mary")
    assert fwd.label is Label.NEUTRAL and fwd.direction is NW


def test_downward_monotone_example(by_id, lexicon, tax):
    pairs = _pairs(by_id["t1-down"], lexicon, tax)
    p = _find(pairs, "At most ten commissioners spend time at home",
              "At most ten female commissioners spend time at home")
    assert p.label is Label.ENTAILMENT and p.section is Section.DOWN


def test_toggles(by_id, lexicon, tax):
    s = by_id["fig1"]
    full = _pairs(s, lexicon, tax)
    no_lex = _pairs(s, lexicon, tax, lexical=False)
    no_elim = _pairs(s, lexicon, tax, elimination=False)
    no_swap = _pairs(s, lexicon, tax, swap=False)
    assert all(p.replacement_kind is ReplacementKind.ELIMINATION for p in no_lex)
    assert all(p.replacement_kind is ReplacementKind.LEXICAL for p in no_elim)
    assert all(p.orientation is Orientation.FORWARD for p in no_swap)
    assert len(no_lex) + len(no_elim) == len(full) == 2 * len(no_swap)
    assert len(_pairs(s, lexicon, tax, max_pairs=3)) == 3
    deeper = _pairs(s, lexicon, tax, max_depth=2)
    assert len(deeper) > len(full)


def test_pair_ids_stable_and_unique(corpus, lexicon, tax):
    pairs = generate_corpus(select_sentences(corpus, lexicon), lexicon, tax)
    ids = [p.pair_id for p in pairs]
    assert len(ids) == len(set(ids))
    again = generate_corpus(select_sentences(corpus, lexicon), lexicon, tax)
    assert [p.to_json() for p in pairs] == [p.to_json() for p in again]


def test_no_sites_no_pairs(lexicon, tax):
    from helpgen.deriv import Internal, Leaf, Sentence, parse_category
    tom = Leaf("Tom", "tom", "n", "PER", None, parse_category("NP"))
    sleeps = Leaf("sleeps", "sleep", "v", "EXS", "sleep.v.01", parse_category("S\\NP"))
    s = Sentence("plain", Internal("ba", parse_category("S"), (tom, sleeps)))
    assert generate(s, lexicon, tax) == []


def test_silver_senses_filled_by_lesk(by_id, lexicon, tax):
    skipped = Counter()
    filled = fill_senses(by_id["v01"], tax, skipped)
    senses = {lf.token: lf.sense for lf in filled.leaves()}
    assert senses["bank"] == "bank.n.01"
    assert senses["fisherman"] == "fisherman.n.01"
    assert senses["sat"] == "sit.v.01"
    assert senses["Every"] is None
    pairs = _pairs(by_id["v01"], lexicon, tax)
    _find(pairs, "Every fisherman sat on the bank of the river",
          "Every fisherman sat on the slope of the river")


def test_skip_reasons_are_counted(by_id, lexicon, tax):
    skipped = Counter()
    generate(by_id["v02"], lexicon, tax, GenConfig(), skipped)
    assert skipped["no_candidates"] >= 1  # "money" has neither hypernym nor hyponym


def test_missing_form_is_skipped(by_id, lexicon, tax):
    from helpgen.taxonomy import Taxonomy
    records = []
    for e in tax.entries.values():
        forms = dict(e.forms)
        if e.sense == "foster_child.n.01":
            forms.pop("pl")
        records.append({"sense": e.sense, "lemma": e.lemma, "pos": e.pos, "gloss": list(e.gloss),
                        "hypernyms": sorted(e.hypernyms), "forms": forms})
    thin = Taxonomy.from_records(records, tax.stop_tokens)
    skipped = Counter()
    pairs = generate(by_id["fig1"], lexicon, thin, GenConfig(), skipped)
    assert skipped["missing_form"] == 1
    assert not any("foster" in p.hypothesis for p in pairs)


def test_bundled_output_has_no_violations(corpus, lexicon, tax):
    pairs = generate_corpus(select_sentences(corpus, lexicon), lexicon, tax)
    assert len(pairs) >= 300
    assert label_violations(pairs) == []
    assert {p.section for p in pairs} == set(Section)


def test_violations_are_detected(by_id, lexicon, tax):
    from dataclasses import replace
    pairs = _pairs(by_id["fig1"], lexicon, tax)
    flipped = replace(pairs[0], label=Label.ENTAILMENT if pairs[0].label is Label.NEUTRAL
                      else Label.NEUTRAL)
    problems = label_violations([flipped] + pairs[1:])
    assert any(pairs[0].pair_id in p for p in problems)
    same = replace(pairs[0], hypothesis=pairs[0].premise)
    assert any("equals" in p for p in label_violations([same]))


def test_pair_json_round_trip(by_id, lexicon, tax):
    for p in _pairs(by_id["t2-down"], lexicon, tax):
        rec = p.to_json()
        assert list(rec) == list(InferencePair.FIELDS)
        assert InferencePair.from_json(rec) == p
