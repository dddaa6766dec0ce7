"""Premise/hypothesis pair generation from polarized derivations."""
from __future__ import annotations

import enum
import hashlib
from collections import Counter
from dataclasses import dataclass, replace
from typing import Iterable

from .deriv import (
    DerivationError,
    Internal,
    Leaf,
    Node,
    Sentence,
    leaves,
    node_at,
    replace_at,
    tokens,
    validate,
    walk,
)
from .polarity import (
    DOWN,
    FLAT,
    UP,
    OperatorLexicon,
    Polarity,
    ReplacementSite,
    SiteKind,
    find_sites,
    mark,
)
from .taxonomy import Direction, SenseUnavailable, Taxonomy, lesk, replacements_for

# semantic tags of content words whose sense may be filled in by Lesk
CONTENT_SEMTAGS = frozenset({"CON", "ROL", "EXS", "ENS", "EPS", "EXG", "EXT", "EFS", "IST", "SST"})


class Label(enum.Enum):
    ENTAILMENT = "entailment"
    NEUTRAL = "neutral"

    def __str__(self) -> str:
        return self.value


class Section(enum.Enum):
    UP = "up"
    DOWN = "down"
    NON = "non"
    CONJ = "conj"
    DISJ = "disj"

    def __str__(self) -> str:
        return self.value


class ReplacementKind(enum.Enum):
    LEXICAL = "lexical"
    ELIMINATION = "elimination"

    def __str__(self) -> str:
        return self.value


class Orientation(enum.Enum):
    FORWARD = "forward"
    SWAPPED = "swapped"

    def __str__(self) -> str:
        return self.value


class DegenerateElimination(ValueError):
    pass


@dataclass(frozen=True)
class LexicalPayload:
    sense: str
    lemma: str
    token: str


@dataclass(frozen=True)
class Replacement:
    site: ReplacementSite
    direction: Direction
    payload: LexicalPayload | Node

    def __post_init__(self):
        expected = {SiteKind.MODIFIER: Direction.BROADEN, SiteKind.CONJUNCT: Direction.BROADEN,
                    SiteKind.DISJUNCT: Direction.NARROW}.get(self.site.kind)
        if expected is not None and self.direction is not expected:
            raise ValueError(f"{self.site.kind.value} elimination must {expected.value}")

    @property
    def kind(self) -> ReplacementKind:
        return ReplacementKind.ELIMINATION if self.site.is_elimination else ReplacementKind.LEXICAL

    @property
    def payload_key(self) -> str:
        if isinstance(self.payload, LexicalPayload):
            return self.payload.sense
        return f"drop:{self.site.side or 'modifier'}"


@dataclass(frozen=True)
class InferencePair:
    pair_id: str
    premise: str
    hypothesis: str
    label: Label
    section: Section
    replacement_kind: ReplacementKind
    direction: Direction
    site_polarity: Polarity | None
    source_id: str
    orientation: Orientation

    FIELDS = ("pair_id", "premise", "hypothesis", "label", "section", "replacement_kind",
              "direction", "site_polarity", "source_id", "orientation")

    def to_json(self) -> dict:
        out = {}
        for name in self.FIELDS:
            v = getattr(self, name)
            out[name] = v.value if isinstance(v, enum.Enum) else v
        return out

    @classmethod
    def from_json(cls, obj: dict) -> "InferencePair":
        pol = obj.get("site_polarity")
        return cls(
            pair_id=str(obj["pair_id"]),
            premise=obj["premise"],
            hypothesis=obj["hypothesis"],
            label=Label(obj["label"]),
            section=Section(obj["section"]),
            replacement_kind=ReplacementKind(obj["replacement_kind"]),
            direction=Direction(obj["direction"]),
            site_polarity=Polarity(pol) if pol else None,
            source_id=obj["source_id"],
            orientation=Orientation(obj["orientation"]),
        )


@dataclass(frozen=True)
class GenConfig:
    max_depth: int = 1
    lexical: bool = True
    elimination: bool = True
    swap: bool = True
    max_pairs: int | None = None


def assign_label(site_polarity: Polarity, direction: Direction) -> Label:
    if (site_polarity is UP and direction is Direction.BROADEN) or \
            (site_polarity is DOWN and direction is Direction.NARROW):
        return Label.ENTAILMENT
    return Label.NEUTRAL


def classify_section(site: ReplacementSite, replacement_kind: ReplacementKind) -> Section:
    if replacement_kind is ReplacementKind.ELIMINATION:
        if site.kind is SiteKind.CONJUNCT:
            return Section.CONJ
        if site.kind is SiteKind.DISJUNCT:
            return Section.DISJ
    if site.polarity is FLAT:
        return Section.NON
    if site.downward_scope:
        return Section.DOWN
    return Section.UP


def _match_case(template: str, word: str) -> str:
    if template[:1].isupper() and word[:1].islower():
        return word[0].upper() + word[1:]
    return word


def lexical_payload(leaf: Leaf, target: str, tax: Taxonomy) -> LexicalPayload | None:
    """Surface realization of ``target`` in the inflection of ``leaf``, if the taxonomy has it."""
    key = tax.entry(leaf.sense).form_key(leaf.token)
    if key is None:
        return None
    entry = tax.entry(target)
    form = entry.form(key)
    if form is None:
        return None
    return LexicalPayload(target, entry.lemma, _match_case(leaf.token, form))


def _parent_path(path: tuple[int, ...]) -> tuple[int, ...]:
    if not path:
        raise DegenerateElimination("cannot eliminate the whole sentence")
    return path[:-1]


def _eliminate(root: Node, site: ReplacementSite) -> Node:
    ppath = _parent_path(site.path)
    parent = node_at(root, ppath)
    assert isinstance(parent, Internal)
    idx = site.path[-1]
    if site.kind is SiteKind.MODIFIER:
        functor = 0 if parent.rule in ("fa", "fc") else 1
        if parent.rule not in ("fa", "ba") or idx != functor:
            raise DegenerateElimination(
                f"{' '.join(tokens(site.node))!r} is an argument, not a removable modifier")
        keep = parent.children[1 - idx]
    elif site.side == "right":
        keep = parent.children[0]
    elif site.side == "left":
        # the coordinator is orphaned together with the left conjunct
        keep = parent.children[1].children[1]
    else:
        raise DegenerateElimination(f"coordination site without a side at {site.path}")
    if keep.category != parent.category:
        raise DegenerateElimination(f"removal at {site.path} changes category {parent.category}")
    return replace_at(root, ppath, keep)


def _restore_initial_case(original: Node, new_root: Node) -> Node:
    first_old = leaves(original)[0]
    new_leaves = leaves(new_root)
    first_new = new_leaves[0]
    if first_new is first_old or not first_old.token[:1].isupper():
        return new_root
    fixed = _match_case(first_old.token, first_new.token)
    if fixed == first_new.token:
        return new_root
    # leftmost leaf: follow child 0 down from the root
    path: tuple[int, ...] = ()
    node = new_root
    while isinstance(node, Internal):
        path += (0,)
        node = node.children[0]
    return replace_at(new_root, path, replace(first_new, token=fixed))


def apply_replacement(sentence: Sentence, r: Replacement) -> Sentence:
    site = r.site
    root = sentence.root
    if node_at(root, site.path) != site.node:
        raise ValueError(f"site {site.path} does not belong to sentence {sentence.id}")
    if site.kind is SiteKind.LEXICAL_HEAD:
        payload = r.payload
        if not isinstance(payload, LexicalPayload):
            raise TypeError("lexical replacement needs a LexicalPayload")
        leaf = site.node
        target_pos = payload.sense.split(".")[-2]
        if target_pos != leaf.pos:
            raise ValueError(f"sense {payload.sense} does not match pos {leaf.pos!r}")
        new_leaf = replace(leaf, token=_match_case(leaf.token, payload.token),
                           lemma=payload.lemma, sense=payload.sense)
        new_root = replace_at(root, site.path, new_leaf)
    else:
        new_root = _eliminate(root, site)
    new_root = _restore_initial_case(root, new_root)
    try:
        validate(new_root)
    except DerivationError as e:
        raise DegenerateElimination(str(e)) from None
    tag = hashlib.sha1(f"{site.path}|{r.payload_key}".encode()).hexdigest()[:8]
    return Sentence(f"{sentence.id}~{tag}", new_root, sentence.source_tier)


def fill_senses(sentence: Sentence, tax: Taxonomy, skipped: Counter | None = None) -> Sentence:
    """Fill missing senses of content words by Lesk over the whole sentence."""
    context = tokens(sentence.root)
    root = sentence.root
    for path, node in list(walk(root)):
        if not isinstance(node, Leaf) or node.sense is not None:
            continue
        if node.pos not in ("n", "v", "a") or node.semtag not in CONTENT_SEMTAGS:
            continue
        try:
            sense = lesk(node.lemma, node.pos, context, tax)
        except SenseUnavailable:
            if skipped is not None:
                skipped["sense_unavailable"] += 1
            continue
        root = replace_at(root, path, replace(node, sense=sense))
    return Sentence(sentence.id, root, sentence.source_tier)


def pair_id(source_id: str, site_index: int, payload_key: str, orientation: Orientation) -> str:
    key = f"{source_id}|{site_index}|{payload_key}|{orientation.value}"
    return hashlib.sha1(key.encode("utf-8")).hexdigest()[:16]


def replacements_at(site: ReplacementSite, tax: Taxonomy, cfg: GenConfig,
                    skipped: Counter) -> list[Replacement]:
    if site.kind is SiteKind.LEXICAL_HEAD:
        if not cfg.lexical:
            return []
        leaf = site.node
        if leaf.sense not in tax:
            skipped["sense_not_in_taxonomy"] += 1
            return []
        if tax.entry(leaf.sense).form_key(leaf.token) is None:
            skipped["unknown_inflection"] += 1
            return []
        out = []
        candidates = 0
        for direction in (Direction.BROADEN, Direction.NARROW):
            for target in replacements_for(leaf.sense, direction, tax, cfg.max_depth):
                candidates += 1
                payload = lexical_payload(leaf, target, tax)
                if payload is None:
                    skipped["missing_form"] += 1
                    continue
                out.append(Replacement(site, direction, payload))
        if not candidates:
            skipped["no_candidates"] += 1
        return out
    if not cfg.elimination:
        return []
    direction = Direction.NARROW if site.kind is SiteKind.DISJUNCT else Direction.BROADEN
    return [Replacement(site, direction, site.node)]


def generate(sentence: Sentence, lexicon: OperatorLexicon, tax: Taxonomy,
             cfg: GenConfig = GenConfig(), skipped: Counter | None = None,
             derivations: dict[str, Sentence] | None = None) -> list[InferencePair]:
    """All pairs for one sentence, sorted by pair id.

    ``skipped`` accumulates skip reasons; ``derivations`` collects the derivation
    behind every emitted sentence string (used for verification).
    """
    if skipped is None:
        skipped = Counter()
    if sentence.source_tier == "silver":
        sentence = fill_senses(sentence, tax, skipped)
    pd = mark(sentence, lexicon)
    sites = find_sites(pd, lexicon)
    original = sentence.text
    if derivations is not None:
        derivations.setdefault(original, sentence)
    pairs: list[InferencePair] = []
    seen: set[tuple[str, str]] = set()

    def emit(premise, hypothesis, label, site, r, direction, orientation, idx):
        if (premise, hypothesis) in seen:
            skipped["duplicate"] += 1
            return
        seen.add((premise, hypothesis))
        pairs.append(InferencePair(
            pair_id=pair_id(sentence.id, idx, r.payload_key, orientation),
            premise=premise, hypothesis=hypothesis, label=label,
            section=classify_section(site, r.kind), replacement_kind=r.kind,
            direction=direction, site_polarity=site.polarity, source_id=sentence.id,
            orientation=orientation))

    for idx, site in enumerate(sites):
        for r in replacements_at(site, tax, cfg, skipped):
            try:
                modified = apply_replacement(sentence, r)
            except DegenerateElimination:
                skipped["degenerate"] += 1
                continue
            changed = modified.text
            if changed == original:
                skipped["equal_surface"] += 1
                continue
            if derivations is not None:
                derivations.setdefault(changed, modified)
            emit(original, changed, assign_label(site.polarity, r.direction), site, r,
                 r.direction, Orientation.FORWARD, idx)
            if cfg.swap:
                inv = r.direction.inverted()
                emit(changed, original, assign_label(site.polarity, inv), site, r,
                     inv, Orientation.SWAPPED, idx)
    if cfg.max_pairs is not None and len(pairs) > cfg.max_pairs:
        skipped["truncated"] += len(pairs) - cfg.max_pairs
        pairs = pairs[:cfg.max_pairs]
    pairs.sort(key=lambda p: p.pair_id)
    return pairs


def generate_corpus(corpus: Iterable[Sentence], lexicon: OperatorLexicon, tax: Taxonomy,
                    cfg: GenConfig = GenConfig(), skipped: Counter | None = None,
                    derivations: dict[str, Sentence] | None = None) -> list[InferencePair]:
    out: list[InferencePair] = []
    for s in corpus:
        out.extend(generate(s, lexicon, tax, cfg, skipped, derivations))
    return out


# ---------------------------------------------------------------------------
# invariants over emitted pairs

def edit_span(premise: str, hypothesis: str) -> tuple[int, int, int, int] | None:
    """Differing token span (p_start, p_end, h_start, h_end), or None when equal."""
    p, h = premise.split(), hypothesis.split()
    if p == h:
        return None
    i = 0
    while i < min(len(p), len(h)) and p[i] == h[i]:
        i += 1
    j = 0
    while j < min(len(p), len(h)) - i and p[len(p) - 1 - j] == h[len(h) - 1 - j]:
        j += 1
    return i, len(p) - j, i, len(h) - j


def label_violations(pairs: list[InferencePair]) -> list[str]:
    """Human-readable violations of the label calculus and pair-shape invariants."""
    problems = []
    by_site: dict[tuple[str, str], list[InferencePair]] = {}
    for p in pairs:
        if p.premise == p.hypothesis:
            problems.append(f"{p.pair_id}: premise equals hypothesis")
        if p.site_polarity is not None:
            ent = (p.site_polarity, p.direction) in (
                (UP, Direction.BROADEN), (DOWN, Direction.NARROW))
            if ent != (p.label is Label.ENTAILMENT):
                problems.append(f"{p.pair_id}: label {p.label} for "
                                f"({p.site_polarity}, {p.direction})")
            if p.site_polarity is FLAT and p.label is not Label.NEUTRAL:
                problems.append(f"{p.pair_id}: flat site labelled {p.label}")
        span = edit_span(p.premise, p.hypothesis)
        if span is None or (span[0] == span[1] and span[2] == span[3]):
            problems.append(f"{p.pair_id}: no single edit span")
        key = (p.premise, p.hypothesis) if p.orientation is Orientation.FORWARD \
            else (p.hypothesis, p.premise)
        by_site.setdefault((p.source_id,) + key, []).append(p)
    for group in by_site.values():
        if len(group) != 2:
            continue
        if group[0].site_polarity in (UP, DOWN):
            n_ent = sum(g.label is Label.ENTAILMENT for g in group)
            if n_ent != 1:
                problems.append(f"{group[0].pair_id}/{group[1].pair_id}: "
                                f"{n_ent} entailments in a forward/swapped pair")
    return problems
