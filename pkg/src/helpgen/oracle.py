"""Finite-model generalized-quantifier semantics used to verify generated labels.

Sentences are read compositionally off their derivations into a small
logical language: quantified statements over one-place predicate expressions,
material conditionals and negation.  Entailment is checked by enumerating all
admissible models up to a domain bound.

Predicates are monadic.  A transitive verb or preposition with an
existentially read object becomes an opaque ``Lift`` predicate ("x removed
some glasses"); an object quantifier over a proper-name subject becomes a
``Conv`` predicate over objects ("things Shakespeare wrote").  Models must
respect the inclusions these predicates inherit from the taxonomy.
"""
from __future__ import annotations

import itertools
import re
from collections import Counter
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator, Mapping, Union

import numpy as np

from .deriv import Internal, Leaf, Node, Sentence, is_modifier_category
from .genpairs import GenConfig, InferencePair, Label, generate_corpus
from .polarity import NONINTERSECTIVE_SEMTAGS, OperatorLexicon
from .taxonomy import Taxonomy

QUANTIFIERS = ("all", "some", "no", "both", "at_most")
_DETERMINERS = {
    "all": "all", "every": "all", "each": "all",
    "some": "some", "a": "some", "an": "some",
    "no": "no", "both": "both",
    # definites and possessives get the existential reading
    "the": "some", "his": "some", "her": "some", "its": "some", "their": "some",
    "my": "some", "your": "some", "our": "some",
}
_OUTSIDE_FRAGMENT = {"several", "many", "few", "neither", "most", "without", "only"}
_NUMBERS = {"one": 1, "two": 2, "three": 3, "four": 4, "five": 5, "six": 6, "seven": 7,
            "eight": 8, "nine": 9, "ten": 10, "eleven": 11, "twelve": 12}
_AT_MOST_RE = re.compile(r"^at[ _]most[ _](\w+)$")
_AUXILIARIES = {"be", "do", "have", "will", "would", "might", "may", "must", "can", "could",
                "shall", "should"}
_NAME_SEMTAGS = {"PER", "GPE", "GEO", "ORG", "ART", "NAT", "HAP", "PRO", "HAS"}
_SENSE_LIKE = re.compile(r"^.+\.[nvar]\.\d{2,}$")


class Unverifiable(Exception):
    """The sentence lies outside the crisp fragment."""


class ModelError(KeyError):
    pass


class TaxonomyMismatch(ValueError):
    pass


# ---------------------------------------------------------------------------
# predicate expressions

@dataclass(frozen=True)
class Atom:
    symbol: str

    def __str__(self):
        return self.symbol


@dataclass(frozen=True)
class Top:
    def __str__(self):
        return "TOP"


@dataclass(frozen=True)
class Inter:
    parts: tuple["PredExpr", ...]

    def __str__(self):
        return "(" + " & ".join(map(str, self.parts)) + ")"


@dataclass(frozen=True)
class Union_:
    parts: tuple["PredExpr", ...]

    def __str__(self):
        return "(" + " | ".join(map(str, self.parts)) + ")"


@dataclass(frozen=True)
class Compl:
    expr: "PredExpr"

    def __str__(self):
        return f"~{self.expr}"


@dataclass(frozen=True)
class Lift:
    """Individuals standing in ``rel`` to something in ``obj``."""
    rel: str
    obj: "PredExpr"

    def __str__(self):
        return f"{self.rel}[{self.obj}]"


@dataclass(frozen=True)
class Conv:
    """Things that ``subject`` stands in ``rel`` to, under event modifiers ``mods``."""
    rel: str
    subject: str
    mods: tuple["PredExpr", ...] = ()

    def __str__(self):
        mods = "".join(f"+{m}" for m in self.mods)
        return f"{self.rel}<{self.subject}>{mods}"


PredExpr = Union[Atom, Top, Inter, Union_, Compl, Lift, Conv]
ATOMIC = (Atom, Lift, Conv)


def _flatten(cls, parts: Iterable[PredExpr]) -> list[PredExpr]:
    out: list[PredExpr] = []
    for p in parts:
        for q in (p.parts if isinstance(p, cls) else (p,)):
            if q not in out:
                out.append(q)
    return sorted(out, key=str)


def inter(*parts: PredExpr) -> PredExpr:
    flat = [p for p in _flatten(Inter, parts) if not isinstance(p, Top)]
    if not flat:
        return Top()
    return flat[0] if len(flat) == 1 else Inter(tuple(flat))


def union(*parts: PredExpr) -> PredExpr:
    flat = _flatten(Union_, parts)
    if any(isinstance(p, Top) for p in flat):
        return Top()
    return flat[0] if len(flat) == 1 else Union_(tuple(flat))


# ---------------------------------------------------------------------------
# logical forms

@dataclass(frozen=True)
class Quantified:
    q: str
    restrictor: PredExpr
    body: PredExpr
    n: int | None = None

    def __post_init__(self):
        if self.q not in QUANTIFIERS:
            raise ValueError(f"unknown quantifier {self.q!r}")
        if (self.q == "at_most") != (self.n is not None):
            raise ValueError("at_most takes a bound, other quantifiers do not")

    def __str__(self):
        q = f"at_most({self.n})" if self.q == "at_most" else self.q
        return f"{q}({self.restrictor}, {self.body})"


@dataclass(frozen=True)
class Conditional:
    antecedent: "LogicalForm"
    consequent: "LogicalForm"

    def __str__(self):
        return f"({self.antecedent} -> {self.consequent})"


@dataclass(frozen=True)
class Negation:
    body: "LogicalForm"

    def __str__(self):
        return f"not {self.body}"


LogicalForm = Union[Quantified, Conditional, Negation]


def atoms_of(x) -> set:
    """Atomic predicates (Atom, Lift, Conv) occurring in a form or expression."""
    out: set = set()

    def visit(e):
        if isinstance(e, ATOMIC):
            out.add(e)
        elif isinstance(e, (Inter, Union_)):
            for p in e.parts:
                visit(p)
        elif isinstance(e, Compl):
            visit(e.expr)
        elif isinstance(e, Quantified):
            visit(e.restrictor)
            visit(e.body)
        elif isinstance(e, Conditional):
            visit(e.antecedent)
            visit(e.consequent)
        elif isinstance(e, Negation):
            visit(e.body)

    visit(x)
    return out


def map_forms(lf: LogicalForm, fn: Callable[[Quantified], Quantified]) -> LogicalForm:
    if isinstance(lf, Quantified):
        return fn(lf)
    if isinstance(lf, Conditional):
        return Conditional(map_forms(lf.antecedent, fn), map_forms(lf.consequent, fn))
    return Negation(map_forms(lf.body, fn))


# ---------------------------------------------------------------------------
# compositional reading

@dataclass(frozen=True)
class _Pred:
    expr: PredExpr


@dataclass(frozen=True)
class _Name:
    symbol: str


@dataclass(frozen=True)
class _GQ:
    q: str
    restrictor: PredExpr
    n: int | None = None


@dataclass(frozen=True)
class _Rel:
    rel: str


@dataclass(frozen=True)
class _ObjScope:
    """VP whose object quantifier awaits a proper-name subject."""
    gq: _GQ
    rel: str
    mods: tuple[PredExpr, ...] = ()


@dataclass(frozen=True)
class _Prop:
    lf: LogicalForm


@dataclass(frozen=True)
class _Fn:
    fn: Callable
    label: str = ""


def _symbol(leaf: Leaf) -> str:
    return leaf.sense if leaf.sense else f"{leaf.lemma.lower()}:{leaf.pos}"


def _object_expr(np_) -> PredExpr:
    if isinstance(np_, _Name):
        return Atom(np_.symbol)
    if isinstance(np_, _GQ) and np_.q == "some":
        return np_.restrictor
    if isinstance(np_, _Pred):
        return np_.expr
    raise Unverifiable("non-existential object outside object-quantifier position")


def _modify(target, expr: PredExpr):
    if isinstance(target, _Pred):
        return _Pred(inter(target.expr, expr))
    if isinstance(target, _ObjScope):
        return _ObjScope(target.gq, target.rel, tuple(sorted(set(target.mods) | {expr}, key=str)))
    raise Unverifiable(f"cannot modify {type(target).__name__}")


def _sentence(subject, vp) -> _Prop:
    if isinstance(vp, _Pred):
        if isinstance(subject, _Name):
            return _Prop(Quantified("all", Atom(subject.symbol), vp.expr))
        if isinstance(subject, _GQ):
            return _Prop(Quantified(subject.q, subject.restrictor, vp.expr, subject.n))
    if isinstance(vp, _ObjScope) and isinstance(subject, _Name):
        g = vp.gq
        return _Prop(Quantified(g.q, g.restrictor, Conv(vp.rel, subject.symbol, vp.mods), g.n))
    raise Unverifiable(f"cannot combine {type(subject).__name__} with {type(vp).__name__}")


def _apply(f, a):
    if isinstance(f, _Fn):
        return f.fn(a)
    if isinstance(f, _GQ):
        if isinstance(a, _Pred):
            return _sentence(f, a)
        if isinstance(a, _Rel):
            if f.q == "some":
                return _Pred(Lift(a.rel, f.restrictor))
            return _ObjScope(f, a.rel)
    if isinstance(f, (_Pred, _ObjScope)) and isinstance(a, (_Name, _GQ)):
        return _sentence(a, f)
    if isinstance(f, _Rel) and isinstance(a, (_Name, _GQ)):
        if isinstance(a, _GQ) and a.q != "some":
            return _ObjScope(a, f.rel)
        return _Pred(Lift(f.rel, _object_expr(a)))
    raise Unverifiable(f"cannot apply {type(f).__name__} to {type(a).__name__}")


def _coordinate(op: str):
    def right(r):
        def left(l):
            if isinstance(l, _Pred) and isinstance(r, _Pred):
                return _Pred(inter(l.expr, r.expr) if op == "and" else union(l.expr, r.expr))
            raise Unverifiable("coordination of non-predicates")
        return _Fn(left, op)
    return _Fn(right, op)


def _conditional(negate: bool):
    def antecedent(a):
        if not isinstance(a, _Prop):
            raise Unverifiable("conditional antecedent is not a sentence")

        def consequent(c):
            if not isinstance(c, _Prop):
                raise Unverifiable("conditional consequent is not a sentence")
            ante = Negation(a.lf) if negate else a.lf
            return _Prop(Conditional(ante, c.lf))
        return _Fn(consequent, "if")
    return _Fn(antecedent, "if")


def _quantifier(lemma: str) -> tuple[str, int | None] | None:
    lemma = lemma.lower()
    if lemma in _DETERMINERS:
        return _DETERMINERS[lemma], None
    m = _AT_MOST_RE.match(lemma)
    if m:
        word = m.group(1)
        n = _NUMBERS.get(word) or (int(word) if word.isdigit() else None)
        if n is not None:
            return "at_most", n
    return None


def _leaf_value(leaf: Leaf, lexicon: OperatorLexicon):
    cat = str(leaf.category)
    lemma = leaf.lemma.lower()
    if lemma in _OUTSIDE_FRAGMENT or leaf.semtag in ("QUV",) and not _AT_MOST_RE.match(lemma):
        raise Unverifiable(f"{leaf.token!r} has no crisp semantics")
    if leaf.semtag == "NIL":
        return _Fn(lambda x: x, leaf.token)
    if lemma in ("and", "or") and leaf.semtag in ("AND", "DIS"):
        return _coordinate(lemma)
    if leaf.semtag == "IMP":
        if lemma in ("if", "when"):
            return _conditional(False)
        if lemma == "unless":
            return _conditional(True)
        raise Unverifiable(f"unknown conditional {leaf.token!r}")
    q = _quantifier(lemma)
    if q is not None and cat.endswith("/N"):
        return _Fn(lambda n: _GQ(q[0], n.expr, q[1]) if isinstance(n, _Pred)
                   else _bad(leaf), leaf.token)
    if leaf.semtag == "NEG":
        if lemma == "not" and cat == r"(S\NP)/(S\NP)":
            return _Fn(lambda p: _Pred(Compl(p.expr)) if isinstance(p, _Pred) else _bad(leaf),
                       "not")
        raise Unverifiable(f"no crisp reading for {leaf.token!r} : {cat}")
    if cat == "S/(S/(S\\NP))":  # existential "there is"
        return _Fn(lambda g: _apply(g, _Pred(Top())), "exists")
    if cat == "S/S" and lemma in ("there", "be"):
        return _Fn(lambda x: x, lemma)
    if cat == "NP" and leaf.sense is None and (leaf.semtag in _NAME_SEMTAGS or leaf.pos == "n"):
        return _Name(f"name:{lemma}")
    if cat == "N":
        return _Pred(Atom(_symbol(leaf)))
    if cat == "S\\NP":
        return _Pred(Atom(_symbol(leaf)))
    if cat == "(S\\NP)/NP" and leaf.pos == "v":
        return _Rel(_symbol(leaf))
    if is_modifier_category(leaf.category):
        if leaf.pos == "v" and leaf.sense is None and lemma in _AUXILIARIES:
            return _Fn(lambda x: x, lemma)
        if leaf.pos in ("a", "r") and leaf.semtag not in NONINTERSECTIVE_SEMTAGS:
            atom = Atom(_symbol(leaf))
            return _Fn(lambda p: _modify(p, atom), leaf.token)
    if leaf.semtag == "REL" and leaf.category.__class__.__name__ == "Functional" \
            and is_modifier_category(leaf.category.result) and str(leaf.category.argument) == "NP":
        rel = _symbol(leaf)
        return _Fn(lambda np_: _Fn(lambda p: _modify(p, Lift(rel, _object_expr(np_))), rel), rel)
    raise Unverifiable(f"no reading for {leaf.token!r} : {cat}")


def _bad(leaf: Leaf):
    raise Unverifiable(f"ill-typed argument for {leaf.token!r}")


def _value(node: Node, lexicon: OperatorLexicon):
    if isinstance(node, Leaf):
        return _leaf_value(node, lexicon)
    vals = [_value(c, lexicon) for c in node.children]
    if node.rule == "fa":
        return _apply(vals[0], vals[1])
    if node.rule == "ba":
        return _apply(vals[1], vals[0])
    if node.rule == "fc":
        f, g = vals
        return _Fn(lambda x: _apply(f, _apply(g, x)), "fc")
    if node.rule == "bc":
        g, f = vals
        return _Fn(lambda x: _apply(f, _apply(g, x)), "bc")
    (child,) = vals
    if node.rule == "lex-raise":
        return _Fn(lambda fn: _apply(fn, child), "raise")
    # unary type change; a bare noun used as a noun phrase reads existentially
    if str(node.category) == "NP" and isinstance(child, _Pred):
        return _GQ("some", child.expr)
    return child


def to_logical_form(sentence: Sentence, lexicon: OperatorLexicon) -> LogicalForm:
    """Translate a derivation; raises Unverifiable outside the crisp fragment."""
    val = _value(sentence.root, lexicon)
    if not isinstance(val, _Prop):
        raise Unverifiable(f"derivation does not denote a proposition ({type(val).__name__})")
    return val.lf


# ---------------------------------------------------------------------------
# models and evaluation

@dataclass(frozen=True)
class Model:
    domain: frozenset
    extension: Mapping[str, frozenset] = field(hash=False)

    def to_json(self) -> dict:
        return {"domain": sorted(self.domain),
                "extension": {k: sorted(v) for k, v in sorted(self.extension.items())}}


def eval_pred(expr: PredExpr, m: Model) -> frozenset:
    if isinstance(expr, ATOMIC):
        try:
            return m.extension[str(expr)]
        except KeyError:
            raise ModelError(f"model has no extension for {expr}") from None
    if isinstance(expr, Top):
        return m.domain
    if isinstance(expr, Inter):
        out = m.domain
        for p in expr.parts:
            out = out & eval_pred(p, m)
        return out
    if isinstance(expr, Union_):
        out = frozenset()
        for p in expr.parts:
            out = out | eval_pred(p, m)
        return out
    if isinstance(expr, Compl):
        return m.domain - eval_pred(expr.expr, m)
    raise TypeError(expr)


def eval(lf: LogicalForm, m: Model) -> bool:  # noqa: A001 - mirrors the formal name
    if isinstance(lf, Quantified):
        r, b = eval_pred(lf.restrictor, m), eval_pred(lf.body, m)
        if lf.q == "all":
            return r <= b
        if lf.q == "some":
            return bool(r & b)
        if lf.q == "no":
            return not (r & b)
        if lf.q == "both":
            return len(r) == 2 and r <= b
        return len(r & b) <= lf.n
    if isinstance(lf, Conditional):
        return (not eval(lf.antecedent, m)) or eval(lf.consequent, m)
    if isinstance(lf, Negation):
        return not eval(lf.body, m)
    raise TypeError(lf)


# ---------------------------------------------------------------------------
# admissibility

def _rel_leq(a: str, b: str, tax: Taxonomy) -> bool:
    if a == b:
        return True
    return a in tax and b in tax and tax.is_hyponym_or_equal(a, b)


def pred_leq(a: PredExpr, b: PredExpr, tax: Taxonomy) -> bool:
    """Sound structural test for ``a ⊑ b`` in every admissible model."""
    if a == b or isinstance(b, Top):
        return True
    if isinstance(b, Inter):
        return all(pred_leq(a, y, tax) for y in b.parts)
    if isinstance(a, Union_):
        return all(pred_leq(x, b, tax) for x in a.parts)
    if isinstance(a, Inter) and any(pred_leq(x, b, tax) for x in a.parts):
        return True
    if isinstance(b, Union_) and any(pred_leq(a, y, tax) for y in b.parts):
        return True
    if isinstance(a, Compl) and isinstance(b, Compl):
        return pred_leq(b.expr, a.expr, tax)
    if isinstance(a, Atom) and isinstance(b, Atom):
        return _rel_leq(a.symbol, b.symbol, tax)
    if isinstance(a, Lift) and isinstance(b, Lift):
        return _rel_leq(a.rel, b.rel, tax) and pred_leq(a.obj, b.obj, tax)
    if isinstance(a, Conv) and isinstance(b, Conv):
        return (a.subject == b.subject and _rel_leq(a.rel, b.rel, tax)
                and all(any(pred_leq(x, y, tax) for x in a.mods) for y in b.mods))
    return False


def _check_symbols(atoms: Iterable, tax: Taxonomy) -> None:
    def check(sym: str):
        if _SENSE_LIKE.match(sym) and sym not in tax:
            raise TaxonomyMismatch(f"predicate {sym!r} is not in the taxonomy")

    def visit(e):
        if isinstance(e, Atom):
            check(e.symbol)
        elif isinstance(e, Lift):
            check(e.rel)
            for a in atoms_of(e.obj):
                visit(a)
        elif isinstance(e, Conv):
            check(e.rel)
            for m in e.mods:
                for a in atoms_of(m):
                    visit(a)

    for a in atoms:
        visit(a)


def is_name(atom) -> bool:
    return isinstance(atom, Atom) and atom.symbol.startswith("name:")


def is_admissible(m: Model, tax: Taxonomy, atoms: Iterable | None = None) -> bool:
    keys = list(atoms) if atoms is not None else None
    if keys is None:
        return True
    for a in keys:
        if is_name(a) and len(m.extension[str(a)]) != 1:
            return False
    for a, b in itertools.permutations(keys, 2):
        if pred_leq(a, b, tax) and not m.extension[str(a)] <= m.extension[str(b)]:
            return False
    return True


# ---------------------------------------------------------------------------
# bounded entailment

@dataclass(frozen=True)
class Verdict:
    entailed: bool
    countermodel: Model | None = None

    def __str__(self):
        return "entailed" if self.entailed else "countermodel"


def rescale(lf: LogicalForm, d: int) -> LogicalForm:
    """Clamp at_most bounds below the domain bound so they stay informative."""
    cap = max(d - 1, 0)
    return map_forms(lf, lambda f: Quantified(f.q, f.restrictor, f.body, min(f.n, cap))
                     if f.q == "at_most" and f.n > cap else f)


class _Space:
    """Admissible individual types over a fixed list of atomic predicates."""

    def __init__(self, atoms: list, tax: Taxonomy):
        self.atoms = atoms
        k = len(atoms)
        if k > 20:
            raise Unverifiable(f"too many predicates ({k}) to enumerate")
        implies = [0] * k
        for i, j in itertools.permutations(range(k), 2):
            if pred_leq(atoms[i], atoms[j], tax):
                implies[i] |= 1 << j
        masks = np.arange(1 << k, dtype=np.int64)
        ok = np.ones(len(masks), dtype=bool)
        for i in range(k):
            if implies[i]:
                has_i = (masks >> i) & 1 == 1
                ok &= ~has_i | ((masks & implies[i]) == implies[i])
        self.types = masks[ok]
        self.names = [i for i, a in enumerate(atoms) if is_name(a)]
        self.index = {a: i for i, a in enumerate(atoms)}

    def vector(self, expr: PredExpr) -> np.ndarray:
        if isinstance(expr, ATOMIC):
            return ((self.types >> self.index[expr]) & 1).astype(bool)
        if isinstance(expr, Top):
            return np.ones(len(self.types), dtype=bool)
        if isinstance(expr, Inter):
            out = self.vector(expr.parts[0])
            for p in expr.parts[1:]:
                out = out & self.vector(p)
            return out
        if isinstance(expr, Union_):
            out = self.vector(expr.parts[0])
            for p in expr.parts[1:]:
                out = out | self.vector(p)
            return out
        if isinstance(expr, Compl):
            return ~self.vector(expr.expr)
        raise TypeError(expr)

    def truth(self, lf: LogicalForm, counts: np.ndarray) -> np.ndarray:
        if isinstance(lf, Quantified):
            r, b = self.vector(lf.restrictor), self.vector(lf.body)

            def card(v):
                return counts @ v.astype(np.int64)
            if lf.q == "all":
                return card(r & ~b) == 0
            if lf.q == "some":
                return card(r & b) > 0
            if lf.q == "no":
                return card(r & b) == 0
            if lf.q == "both":
                return (card(r) == 2) & (card(r & ~b) == 0)
            return card(r & b) <= lf.n
        if isinstance(lf, Conditional):
            return ~self.truth(lf.antecedent, counts) | self.truth(lf.consequent, counts)
        if isinstance(lf, Negation):
            return ~self.truth(lf.body, counts)
        raise TypeError(lf)

    def models(self, d: int, chunk: int = 50_000) -> Iterator[tuple[np.ndarray, list]]:
        """Count matrices over multisets of types, domain sizes 1..d, in chunks."""
        t = len(self.types)
        for size in range(1, d + 1):
            combos = itertools.combinations_with_replacement(range(t), size)
            while True:
                block = list(itertools.islice(combos, chunk))
                if not block:
                    break
                idx = np.array(block, dtype=np.int64)
                counts = np.zeros((len(block), t), dtype=np.int64)
                rows = np.repeat(np.arange(len(block)), size)
                np.add.at(counts, (rows, idx.ravel()), 1)
                if self.names:
                    keep = np.ones(len(block), dtype=bool)
                    for i in self.names:
                        col = ((self.types >> i) & 1).astype(np.int64)
                        keep &= counts @ col == 1
                    counts = counts[keep]
                    block = [b for b, k in zip(block, keep) if k]
                if len(block):
                    yield counts, block

    def model(self, combo) -> Model:
        domain = [f"e{i}" for i in range(len(combo))]
        ext = {}
        for j, a in enumerate(self.atoms):
            ext[str(a)] = frozenset(e for e, ti in zip(domain, combo)
                                    if (int(self.types[ti]) >> j) & 1)
        return Model(frozenset(domain), ext)


def check_entailment(p: LogicalForm, h: LogicalForm, tax: Taxonomy, d: int = 3) -> Verdict:
    """Does ``p`` entail ``h`` in every admissible model with at most ``d`` individuals?

    Models are enumerated up to isomorphism: a model is a multiset of
    individual types (sets of atomic predicates closed under the taxonomy
    inclusions), which is exhaustive for these isomorphism-invariant forms.
    """
    if d < 1:
        raise ValueError("domain bound must be at least 1")
    if p == h:
        return Verdict(True)
    p, h = rescale(p, d), rescale(h, d)
    atoms = sorted(atoms_of(p) | atoms_of(h), key=str)
    _check_symbols(atoms, tax)
    space = _Space(atoms, tax)
    for counts, block in space.models(d):
        bad = space.truth(p, counts) & ~space.truth(h, counts)
        if bad.any():
            return Verdict(False, space.model(block[int(np.argmax(bad))]))
    return Verdict(True)


# ---------------------------------------------------------------------------
# dataset verification

@dataclass
class VerificationReport:
    total: int = 0
    verified: int = 0
    agreements: int = 0
    disagreements: list[dict] = field(default_factory=list)
    unverifiable: list[dict] = field(default_factory=list)
    per_section: dict[str, Counter] = field(default_factory=dict)
    domain_size: int = 3

    @property
    def crisp_fraction(self) -> float:
        return self.verified / self.total if self.total else 0.0

    def to_json(self) -> dict:
        return {
            "domain_size": self.domain_size,
            "totals": {"pairs": self.total, "verified": self.verified,
                       "agreements": self.agreements,
                       "disagreements": len(self.disagreements),
                       "unverifiable": len(self.unverifiable)},
            "per_section": {k: dict(sorted(v.items())) for k, v in sorted(self.per_section.items())},
            "disagreements": self.disagreements,
            "unverifiable": self.unverifiable,
        }


def verify_dataset(pairs: list[InferencePair], corpus: Iterable[Sentence],
                   lexicon: OperatorLexicon, tax: Taxonomy, d: int = 3,
                   cfg: GenConfig = GenConfig(),
                   derivations: Mapping[str, Sentence] | None = None) -> VerificationReport:
    """Check every crisp pair's label against bounded model checking.

    Derivations behind the pair strings are rebuilt by regenerating from
    ``corpus`` with ``cfg`` unless given explicitly.
    """
    report = VerificationReport(domain_size=d)
    if not pairs:
        return report
    if derivations is None:
        derivations = {}
        generate_corpus(corpus, lexicon, tax, cfg, Counter(), derivations)
    forms: dict[str, LogicalForm | str] = {}
    verdicts: dict[tuple, Verdict] = {}

    def form(text: str) -> LogicalForm | str:
        if text not in forms:
            s = derivations.get(text)
            if s is None:
                forms[text] = "no derivation for sentence"
            else:
                try:
                    forms[text] = to_logical_form(s, lexicon)
                except Unverifiable as e:
                    forms[text] = str(e)
        return forms[text]

    for pair in pairs:
        report.total += 1
        sec = report.per_section.setdefault(pair.section.value, Counter())
        sec["pairs"] += 1
        fp, fh = form(pair.premise), form(pair.hypothesis)
        if isinstance(fp, str) or isinstance(fh, str):
            report.unverifiable.append({"pair_id": pair.pair_id,
                                        "reason": fp if isinstance(fp, str) else fh})
            continue
        key = (fp, fh)
        if key not in verdicts:
            try:
                verdicts[key] = check_entailment(fp, fh, tax, d)
            except Unverifiable as e:
                report.unverifiable.append({"pair_id": pair.pair_id, "reason": str(e)})
                continue
        verdict = verdicts[key]
        report.verified += 1
        sec["verified"] += 1
        expected = Label.ENTAILMENT if verdict.entailed else Label.NEUTRAL
        if expected is pair.label:
            report.agreements += 1
            sec["agreements"] += 1
        else:
            sec["disagreements"] += 1
            report.disagreements.append({
                "pair_id": pair.pair_id, "premise": pair.premise,
                "hypothesis": pair.hypothesis, "label": pair.label.value,
                "verdict": str(verdict), "premise_form": str(fp), "hypothesis_form": str(fh),
                "countermodel": verdict.countermodel.to_json() if verdict.countermodel else None,
            })
    return report
