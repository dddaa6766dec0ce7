"""CCG derivations annotated with semantic tags and word senses.

A corpus is a JSON Lines file; each line holds one sentence whose ``root`` is a
nested derivation node.  An optional first line ``{"atoms": [...]}`` declares
the closed set of atomic category names (default ``S NP N PP``).
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass
from typing import IO, Iterable, Iterator, Union

DEFAULT_ATOMS = frozenset({"S", "NP", "N", "PP"})
RULES = ("fa", "ba", "fc", "bc", "lex-raise", "unary")
BINARY_RULES = frozenset({"fa", "ba", "fc", "bc"})
POS_TAGS = frozenset({"n", "v", "a", "r", "x"})
TIERS = ("gold", "silver")
COORDINATORS = {"and": "AND", "or": "DIS"}

FORWARD = "/"
BACKWARD = "\\"

_SENSE_RE = re.compile(r"^(?P<lemma>.+)\.(?P<pos>[nvar])\.(?P<num>\d{2,})$")


class CategoryParseError(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


class DerivationError(ValueError):
    """A derivation node violates the rule table or a leaf invariant."""


class CorpusError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(prefix + message)
        self.line = line


# ---------------------------------------------------------------------------
# categories

@dataclass(frozen=True)
class Atomic:
    name: str
    feature: str | None = None

    def __str__(self) -> str:
        return self.name if self.feature is None else f"{self.name}[{self.feature}]"


@dataclass(frozen=True)
class Functional:
    result: "Category"
    slash: str
    argument: "Category"

    def __str__(self) -> str:
        return f"{_wrap(self.result)}{self.slash}{_wrap(self.argument)}"


Category = Union[Atomic, Functional]


def _wrap(cat: Category) -> str:
    return f"({cat})" if isinstance(cat, Functional) else str(cat)


def arity(cat: Category) -> int:
    """Number of arguments along the result spine of ``cat``."""
    n = 0
    while isinstance(cat, Functional):
        n += 1
        cat = cat.result
    return n


def is_modifier_category(cat: Category) -> bool:
    return isinstance(cat, Functional) and cat.result == cat.argument


class _CategoryParser:
    def __init__(self, text: str, atoms: frozenset[str]):
        self.text = text
        self.pos = 0
        self.atoms = atoms

    def parse(self) -> Category:
        if not self.text.strip():
            raise CategoryParseError("empty category", 0)
        cat = self._expr()
        if self.pos != len(self.text):
            ch = self.text[self.pos]
            if ch == ")":
                raise CategoryParseError("unbalanced parentheses", self.pos)
            raise CategoryParseError(f"unexpected {ch!r}", self.pos)
        return cat

    def _expr(self) -> Category:
        cat = self._term()
        while self.pos < len(self.text) and self.text[self.pos] in (FORWARD, BACKWARD):
            slash = self.text[self.pos]
            self.pos += 1
            cat = Functional(cat, slash, self._term())
        return cat

    def _term(self) -> Category:
        if self.pos >= len(self.text):
            raise CategoryParseError("empty argument", self.pos)
        ch = self.text[self.pos]
        if ch == "(":
            start = self.pos
            self.pos += 1
            cat = self._expr()
            if self.pos >= len(self.text) or self.text[self.pos] != ")":
                raise CategoryParseError("unbalanced parentheses", start)
            self.pos += 1
            return cat
        m = re.compile(r"[A-Za-z]+").match(self.text, self.pos)
        if m is None:
            raise CategoryParseError("empty argument", self.pos)
        name = m.group(0)
        if name not in self.atoms:
            raise CategoryParseError(f"unknown atomic category {name!r}", self.pos)
        self.pos = m.end()
        feature = None
        if self.pos < len(self.text) and self.text[self.pos] == "[":
            end = self.text.find("]", self.pos)
            if end < 0:
                raise CategoryParseError("unterminated feature", self.pos)
            feature = self.text[self.pos + 1:end]
            self.pos = end + 1
        return Atomic(name, feature)


def parse_category(text: str, atoms: Iterable[str] = DEFAULT_ATOMS) -> Category:
    """Parse ``(S\\NP)/NP``-style notation.  Unparenthesized slashes associate left."""
    return _CategoryParser(text, frozenset(atoms)).parse()


# ---------------------------------------------------------------------------
# derivation trees

def sense_pos(sense: str) -> str:
    m = _SENSE_RE.match(sense)
    if m is None:
        raise ValueError(f"malformed sense identifier {sense!r}")
    return m.group("pos")


def sense_number(sense: str) -> int:
    m = _SENSE_RE.match(sense)
    if m is None:
        raise ValueError(f"malformed sense identifier {sense!r}")
    return int(m.group("num"))


@dataclass(frozen=True)
class Leaf:
    token: str
    lemma: str
    pos: str
    semtag: str
    sense: str | None
    category: Category

    def __post_init__(self):
        if not self.token or not self.lemma:
            raise DerivationError("leaf token and lemma must be non-empty")
        if self.pos not in POS_TAGS:
            raise DerivationError(f"unknown part of speech {self.pos!r} on {self.token!r}")
        if self.sense is not None and sense_pos(self.sense) != self.pos:
            raise DerivationError(
                f"sense {self.sense!r} does not match pos {self.pos!r} on {self.token!r}")

    @property
    def children(self) -> tuple:
        return ()


@dataclass(frozen=True)
class Internal:
    rule: str
    category: Category
    children: tuple["Node", ...]


Node = Union[Leaf, Internal]


def combine(rule: str, children: tuple[Node, ...] | list[Node]) -> Category | None:
    """Result category of ``rule`` over ``children``, or None if it does not apply.

    ``unary`` is unconstrained and also returns None; callers supply the category.
    """
    cats = [c.category for c in children]
    if rule in BINARY_RULES:
        if len(cats) != 2:
            return None
        left, right = cats
        if rule == "fa":
            if isinstance(left, Functional) and left.slash == FORWARD and left.argument == right:
                return left.result
        elif rule == "ba":
            if isinstance(right, Functional) and right.slash == BACKWARD and right.argument == left:
                return right.result
        elif rule == "fc":
            if (isinstance(left, Functional) and isinstance(right, Functional)
                    and left.slash == right.slash == FORWARD and left.argument == right.result):
                return Functional(left.result, FORWARD, right.argument)
        elif rule == "bc":
            if (isinstance(left, Functional) and isinstance(right, Functional)
                    and left.slash == right.slash == BACKWARD and right.argument == left.result):
                return Functional(right.result, BACKWARD, left.argument)
    return None


def _valid_raise(child: Category, cat: Category) -> bool:
    # X => T/(T\X) or T\(T/X)
    if not isinstance(cat, Functional) or not isinstance(cat.argument, Functional):
        return False
    inner = cat.argument
    return (inner.result == cat.result and inner.argument == child
            and inner.slash != cat.slash)


def validate(node: Node, path: tuple[int, ...] = ()) -> None:
    """Check every internal node against the rule table; raise DerivationError naming it."""
    if isinstance(node, Leaf):
        return
    where = f"node {'/'.join(map(str, path)) or 'root'} ({node.rule} => {node.category})"
    if node.rule not in RULES:
        raise DerivationError(f"{where}: unsupported rule {node.rule!r}")
    if node.rule in BINARY_RULES:
        if len(node.children) != 2:
            raise DerivationError(f"{where}: binary rule needs exactly two children")
        result = combine(node.rule, node.children)
        if result is None or result != node.category:
            got = ", ".join(str(c.category) for c in node.children)
            raise DerivationError(f"{where}: cannot combine [{got}]")
    else:
        if len(node.children) != 1:
            raise DerivationError(f"{where}: unary rule needs exactly one child")
        if node.rule == "lex-raise" and not _valid_raise(node.children[0].category, node.category):
            raise DerivationError(f"{where}: not a type-raising of {node.children[0].category}")
    for i, child in enumerate(node.children):
        validate(child, path + (i,))


def leaves(node: Node) -> list[Leaf]:
    out: list[Leaf] = []
    stack = [node]
    while stack:
        n = stack.pop()
        if isinstance(n, Leaf):
            out.append(n)
        else:
            stack.extend(reversed(n.children))
    return out


def walk(node: Node, path: tuple[int, ...] = ()) -> Iterator[tuple[tuple[int, ...], Node]]:
    """Pre-order traversal yielding (path, node); children visited left to right."""
    yield path, node
    for i, child in enumerate(node.children):
        yield from walk(child, path + (i,))


def node_at(node: Node, path: tuple[int, ...]) -> Node:
    for i in path:
        node = node.children[i]
    return node


def replace_at(node: Node, path: tuple[int, ...], new: Node) -> Node:
    if not path:
        return new
    assert isinstance(node, Internal)
    children = list(node.children)
    children[path[0]] = replace_at(children[path[0]], path[1:], new)
    return Internal(node.rule, node.category, tuple(children))


def leaf_span(node: Node, path: tuple[int, ...]) -> tuple[int, int]:
    """Token offsets [start, end) covered by the subtree at ``path``."""
    start = 0
    cur = node
    for i in path:
        for sibling in cur.children[:i]:
            start += len(leaves(sibling))
        cur = cur.children[i]
    return start, start + len(leaves(cur))


def tokens(node: Node) -> list[str]:
    return [leaf.token for leaf in leaves(node)]


def surface(node: Node) -> str:
    return " ".join(tokens(node))


_ATTACH_RE = re.compile(r"^(?:[.,;:!?)]+|'\w*|n't)$")


def detokenize(toks: list[str]) -> str:
    """Join tokens, attaching punctuation and clitics ('s, n't) to the previous token."""
    out = ""
    for tok in toks:
        if out and not _ATTACH_RE.match(tok):
            out += " "
        out += tok
    return out


@dataclass(frozen=True)
class Sentence:
    id: str
    root: Node
    source_tier: str = "gold"

    def __post_init__(self):
        if self.source_tier not in TIERS:
            raise DerivationError(f"unknown tier {self.source_tier!r}")

    @property
    def surface(self) -> str:
        return surface(self.root)

    @property
    def text(self) -> str:
        return detokenize(tokens(self.root))

    def leaves(self) -> list[Leaf]:
        return leaves(self.root)


# ---------------------------------------------------------------------------
# JSON (de)serialization

def node_from_json(obj: dict, atoms: frozenset[str] = DEFAULT_ATOMS) -> Node:
    if not isinstance(obj, dict):
        raise DerivationError(f"node must be an object, got {type(obj).__name__}")
    try:
        cat = parse_category(obj["cat"], atoms)
        if "token" in obj:
            return Leaf(obj["token"], obj["lemma"], obj["pos"], obj["semtag"],
                        obj.get("sense"), cat)
        children = tuple(node_from_json(c, atoms) for c in obj["children"])
        return Internal(obj["rule"], cat, children)
    except KeyError as e:
        raise DerivationError(f"node is missing field {e.args[0]!r}") from None
    except CategoryParseError as e:
        raise DerivationError(f"bad category {obj.get('cat')!r}: {e}") from None


def node_to_json(node: Node) -> dict:
    if isinstance(node, Leaf):
        return {"token": node.token, "lemma": node.lemma, "pos": node.pos,
                "semtag": node.semtag, "sense": node.sense, "cat": str(node.category)}
    return {"rule": node.rule, "cat": str(node.category),
            "children": [node_to_json(c) for c in node.children]}


def sentence_to_json(sentence: Sentence) -> dict:
    return {"id": sentence.id, "tier": sentence.source_tier, "root": node_to_json(sentence.root)}


def read_corpus(stream: IO) -> list[Sentence]:
    """Read and validate a JSON Lines derivation corpus, preserving order."""
    atoms = DEFAULT_ATOMS
    corpus: list[Sentence] = []
    seen: set[str] = set()
    for lineno, raw in enumerate(stream, start=1):
        if isinstance(raw, bytes):
            raw = raw.decode("utf-8")
        line = raw.strip()
        if not line:
            continue
        try:
            obj = json.loads(line)
        except json.JSONDecodeError as e:
            raise CorpusError(f"malformed JSON: {e.msg}", lineno) from None
        if not isinstance(obj, dict):
            raise CorpusError("record must be a JSON object", lineno)
        if "atoms" in obj and "root" not in obj:
            if corpus:
                raise CorpusError("atom header must precede sentences", lineno)
            atoms = frozenset(obj["atoms"])
            continue
        try:
            sid = obj["id"]
            root = node_from_json(obj["root"], atoms)
            validate(root)
            sentence = Sentence(sid, root, obj.get("tier", "gold"))
        except KeyError as e:
            raise CorpusError(f"missing field {e.args[0]!r}", lineno) from None
        except DerivationError as e:
            raise CorpusError(str(e), lineno) from None
        if sid in seen:
            raise CorpusError(f"duplicate sentence id {sid!r}", lineno)
        seen.add(sid)
        corpus.append(sentence)
    return corpus


def write_corpus(sentences: Iterable[Sentence], stream: IO[str]) -> None:
    for s in sentences:
        stream.write(json.dumps(sentence_to_json(s), ensure_ascii=False) + "\n")


def is_coordinator(leaf: Leaf) -> bool:
    return COORDINATORS.get(leaf.lemma.lower()) == leaf.semtag


def select_sentences(corpus: Iterable[Sentence], lexicon) -> list[Sentence]:
    """Sentences longer than five tokens containing an operator or coordinator.

    Whether a sentence is declarative is left to whoever assembled the corpus.
    """
    selected = []
    for s in corpus:
        lvs = s.leaves()
        if len(lvs) <= 5:
            continue
        if any(lexicon.lookup(l.lemma, l.semtag) is not None or is_coordinator(l) for l in lvs):
            selected.append(s)
    return selected

