"""Polarity marking of CCG derivations.

Every node receives Up, Down or Flat.  The root is Up; a functor passes its own
polarity to itself and composes it with the monotonicity of the argument slot
it fills.  Slot monotonicity comes from the operator lexicon for operator
leaves and defaults to Up for every other functor.
"""
from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Iterable

from .deriv import (
    Internal,
    Leaf,
    Node,
    Sentence,
    arity,
    is_coordinator,
    is_modifier_category,
    leaf_span,
    surface,
    walk,
)

OPERATOR_SEMTAGS = frozenset({"AND", "DIS", "NEG", "DEF", "QUV", "IMP"})
# leaves with these tags combine without contributing a slot of their own
TRANSPARENT_SEMTAGS = frozenset({"NIL"})
# modifiers carrying these tags are not intersective and are never dropped
NONINTERSECTIVE_SEMTAGS = frozenset({"FOC", "PRI", "NEG", "NOT", "DEG", "INT", "NEC", "POS"})
CONTENT_POS = frozenset({"n", "v", "a"})


class Polarity(enum.Enum):
    UP = "up"
    DOWN = "down"
    FLAT = "flat"

    def __str__(self) -> str:
        return self.value

    @property
    def arrow(self) -> str:
        return {"up": "↑", "down": "↓", "flat": "="}[self.value]


UP, DOWN, FLAT = Polarity.UP, Polarity.DOWN, Polarity.FLAT


def compose(outer: Polarity, inner: Polarity) -> Polarity:
    if outer is FLAT or inner is FLAT:
        return FLAT
    if outer is UP:
        return inner
    if inner is UP:
        return outer
    return UP  # down under down


class OperatorKind(enum.Enum):
    DETERMINER = "determiner"
    VP_NEGATOR = "vp_negator"
    CONDITIONAL = "conditional"
    COORDINATOR = "coordinator-handled-structurally"


@dataclass(frozen=True)
class MonotonicityProfile:
    operator_kind: OperatorKind
    per_argument: tuple[Polarity, ...]

    @property
    def arity(self) -> int:
        return len(self.per_argument)


class LexiconError(ValueError):
    pass


class MarkingError(ValueError):
    pass


def _infer_kind(lemma: str, semtag: str, n: int) -> OperatorKind:
    if semtag == "IMP":
        return OperatorKind.CONDITIONAL
    if lemma in ("and", "or") and semtag in ("AND", "DIS"):
        return OperatorKind.COORDINATOR
    if n == 1:
        return OperatorKind.VP_NEGATOR
    return OperatorKind.DETERMINER


class OperatorLexicon:
    """Map from (lemma, semtag) to a monotonicity profile; lemma lookup ignores case."""

    def __init__(self, entries: dict[tuple[str, str], MonotonicityProfile] | None = None):
        self._entries: dict[tuple[str, str], MonotonicityProfile] = {}
        for (lemma, semtag), profile in (entries or {}).items():
            self.add(lemma, semtag, profile)

    def add(self, lemma: str, semtag: str, profile: MonotonicityProfile) -> None:
        if semtag not in OPERATOR_SEMTAGS:
            raise LexiconError(f"semtag {semtag!r} of {lemma!r} is not an operator tag")
        self._entries[(lemma.lower(), semtag)] = profile

    def lookup(self, lemma: str, semtag: str) -> MonotonicityProfile | None:
        return self._entries.get((lemma.lower(), semtag))

    def profile_of(self, leaf: Leaf) -> MonotonicityProfile | None:
        return self.lookup(leaf.lemma, leaf.semtag)

    def is_operator(self, leaf: Leaf) -> bool:
        """True for scope-taking operators; coordinators are handled structurally."""
        p = self.profile_of(leaf)
        return p is not None and p.operator_kind is not OperatorKind.COORDINATOR

    def __len__(self) -> int:
        return len(self._entries)

    def __iter__(self):
        return iter(sorted(self._entries.items()))

    @classmethod
    def from_json(cls, data: list[dict]) -> "OperatorLexicon":
        lex = cls()
        for i, entry in enumerate(data):
            try:
                lemma, semtag, n = entry["lemma"], entry["semtag"], entry["arity"]
                args = tuple(Polarity(a) for a in entry["args"])
            except (KeyError, ValueError, TypeError) as e:
                raise LexiconError(f"entry {i}: {e}") from None
            if n != len(args):
                raise LexiconError(f"entry {i} ({lemma}): arity {n} but {len(args)} args")
            kind = OperatorKind(entry["kind"]) if "kind" in entry else _infer_kind(lemma, semtag, n)
            lex.add(lemma, semtag, MonotonicityProfile(kind, args))
        return lex

    @classmethod
    def load(cls, path: str | Path | None = None) -> "OperatorLexicon":
        if path is None:
            text = resources.files("helpgen.data").joinpath("lexicon.json").read_text("utf-8")
        else:
            text = Path(path).read_text("utf-8")
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise LexiconError(f"malformed lexicon JSON: {e}") from None
        if not isinstance(data, list):
            raise LexiconError("lexicon must be a JSON array")
        return cls.from_json(data)


# ---------------------------------------------------------------------------
# marking

@dataclass(frozen=True)
class Slot:
    polarity: Polarity
    from_operator: bool


_TRANSPARENT = None  # signature marker for punctuation-like leaves

Path_ = tuple[int, ...]


@dataclass(frozen=True)
class NodeMark:
    polarity: Polarity
    in_operator_arg: bool
    downward_scope: bool


@dataclass(frozen=True)
class PolarizedDerivation:
    sentence: Sentence
    marks: dict[Path_, NodeMark]

    def polarity(self, path: Path_ = ()) -> Polarity:
        return self.marks[path].polarity

    def nodes(self) -> Iterable[tuple[Path_, Node, NodeMark]]:
        for path, node in walk(self.sentence.root):
            yield path, node, self.marks[path]

    def leaf_polarities(self) -> list[tuple[str, Polarity]]:
        return [(n.token, m.polarity) for _, n, m in self.nodes() if isinstance(n, Leaf)]

    def span_polarity(self, text: str) -> Polarity:
        """Polarity of the highest node whose surface is exactly ``text``."""
        for _, node, m in self.nodes():
            if surface(node) == text:
                return m.polarity
        raise KeyError(text)


def _functor_index(node: Internal) -> int:
    # fa/fc: functor on the left; ba/bc: functor on the right
    return 0 if node.rule in ("fa", "fc") else 1


def _signatures(root: Node, lexicon: OperatorLexicon) -> dict[Path_, tuple[Slot, ...] | None]:
    sigs: dict[Path_, tuple[Slot, ...] | None] = {}

    def visit(node: Node, path: Path_):
        if isinstance(node, Leaf):
            if node.semtag in TRANSPARENT_SEMTAGS:
                sigs[path] = _TRANSPARENT
                return
            n = arity(node.category)
            profile = lexicon.profile_of(node)
            if profile is None:
                sigs[path] = tuple(Slot(UP, False) for _ in range(n))
                return
            if n < profile.arity:
                raise MarkingError(
                    f"operator {node.token!r} has profile arity {profile.arity} "
                    f"but category {node.category} takes {n} argument(s)")
            scoped = profile.operator_kind is not OperatorKind.COORDINATOR
            sigs[path] = (tuple(Slot(p, scoped) for p in profile.per_argument)
                          + tuple(Slot(UP, False) for _ in range(n - profile.arity)))
            return
        for i, child in enumerate(node.children):
            visit(child, path + (i,))
        if node.rule in ("fa", "ba", "fc", "bc"):
            fi = _functor_index(node)
            f = sigs[path + (fi,)]
            a = sigs[path + (1 - fi,)]
            if f is _TRANSPARENT:
                sigs[path] = a
            elif node.rule in ("fa", "ba"):
                sigs[path] = f[1:]
            elif a is _TRANSPARENT:
                sigs[path] = f
            else:
                head = Slot(compose(f[0].polarity, a[0].polarity),
                            f[0].from_operator or a[0].from_operator)
                sigs[path] = (head,) + f[1:]
        else:
            sigs[path] = tuple(Slot(UP, False) for _ in range(arity(node.category)))

    visit(root, ())
    return sigs


def mark(sentence: Sentence, lexicon: OperatorLexicon) -> PolarizedDerivation:
    sigs = _signatures(sentence.root, lexicon)
    marks: dict[Path_, NodeMark] = {}

    def down(node: Node, path: Path_, m: NodeMark):
        marks[path] = m
        if isinstance(node, Leaf):
            return
        if len(node.children) == 1:
            down(node.children[0], path + (0,), m)
            return
        fi = _functor_index(node)
        ai = 1 - fi
        down(node.children[fi], path + (fi,), m)
        fsig = sigs[path + (fi,)]
        if fsig is _TRANSPARENT:
            child = m
        else:
            slot = fsig[0]
            child = NodeMark(compose(m.polarity, slot.polarity),
                             m.in_operator_arg or slot.from_operator,
                             m.downward_scope or (slot.from_operator and slot.polarity is DOWN))
        down(node.children[ai], path + (ai,), child)

    down(sentence.root, (), NodeMark(UP, False, False))
    return PolarizedDerivation(sentence, marks)


# ---------------------------------------------------------------------------
# replacement sites

class SiteKind(enum.Enum):
    LEXICAL_HEAD = "lexical_head"
    MODIFIER = "modifier"
    CONJUNCT = "conjunct"
    DISJUNCT = "disjunct"


@dataclass(frozen=True)
class ReplacementSite:
    path: Path_
    node: Node
    polarity: Polarity
    kind: SiteKind
    downward_scope: bool
    span: tuple[int, int]
    # for coordination sites: which conjunct is dropped
    side: str | None = None

    @property
    def is_elimination(self) -> bool:
        return self.kind is not SiteKind.LEXICAL_HEAD


def _is_modifier(node: Node, lexicon: OperatorLexicon) -> bool:
    if not is_modifier_category(node.category):
        return False
    if isinstance(node, Leaf):
        return (node.pos in ("a", "r") and node.semtag not in NONINTERSECTIVE_SEMTAGS
                and lexicon.profile_of(node) is None)
    # PP adjunct: preposition applied to its object
    if node.rule != "fa" or len(node.children) != 2:
        return False
    prep = node.children[0]
    return (isinstance(prep, Leaf) and prep.semtag == "REL"
            and lexicon.profile_of(prep) is None)


def _coordination(node: Node) -> Leaf | None:
    """The coordinator of ``ba(X, fa(conj, X))``, if ``node`` has that shape."""
    if not isinstance(node, Internal) or node.rule != "ba":
        return None
    right = node.children[1]
    if not isinstance(right, Internal) or right.rule != "fa":
        return None
    conj = right.children[0]
    if isinstance(conj, Leaf) and is_coordinator(conj):
        return conj
    return None


def find_sites(pd: PolarizedDerivation, lexicon: OperatorLexicon) -> list[ReplacementSite]:
    root = pd.sentence.root
    sites: list[ReplacementSite] = []
    for path, node, m in pd.nodes():
        span = leaf_span(root, path)
        if isinstance(node, Leaf):
            if (m.in_operator_arg and node.pos in CONTENT_POS and node.sense is not None
                    and lexicon.profile_of(node) is None):
                sites.append(ReplacementSite(path, node, m.polarity, SiteKind.LEXICAL_HEAD,
                                             m.downward_scope, span))
        coord = _coordination(node)
        if coord is not None:
            kind = SiteKind.CONJUNCT if coord.lemma.lower() == "and" else SiteKind.DISJUNCT
            for side, i in (("left", 0), ("right", 1)):
                cpath = path + (i,)
                sites.append(ReplacementSite(cpath, node.children[i], m.polarity, kind,
                                             m.downward_scope, leaf_span(root, cpath), side))
        if path and m.in_operator_arg and _is_modifier(node, lexicon):
            parent = root
            for i in path[:-1]:
                parent = parent.children[i]
            if (parent.rule in ("fa", "ba") and _functor_index(parent) == path[-1]
                    and _coordination(parent) is None):
                sites.append(ReplacementSite(path, node, m.polarity, SiteKind.MODIFIER,
                                             m.downward_scope, span))
    sites.sort(key=lambda s: (s.span[0], -(s.span[1] - s.span[0]), s.path, s.kind.value))
    return sites
