"""A small WordNet-like ISA taxonomy with Lesk sense disambiguation."""
from __future__ import annotations

import enum
import json
from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from pathlib import Path
from typing import Iterable

from .deriv import sense_number, sense_pos


class TaxonomyError(ValueError):
    pass


class UnknownSense(KeyError):
    pass


class SenseUnavailable(LookupError):
    """No candidate sense for a lemma; the site should be skipped."""


class Direction(enum.Enum):
    BROADEN = "broaden"
    NARROW = "narrow"

    def __str__(self) -> str:
        return self.value

    def inverted(self) -> "Direction":
        return Direction.NARROW if self is Direction.BROADEN else Direction.BROADEN


class Relation(enum.Enum):
    BROADER = "broader"
    NARROWER = "narrower"
    EQUAL = "equal"
    INCOMPARABLE = "incomparable"


@dataclass(frozen=True)
class SenseEntry:
    sense: str
    lemma: str
    pos: str
    gloss: tuple[str, ...]
    hypernyms: frozenset[str]
    # inflected surface forms keyed by inflection name ("pl", "past", "ing", ...)
    forms: dict[str, str] = field(default_factory=dict, hash=False, compare=False)

    @property
    def base_form(self) -> str:
        return self.forms.get("base", self.lemma.replace("_", " "))

    def form_key(self, token: str) -> str | None:
        """Which inflection of this entry ``token`` is, or None if unknown."""
        t = token.lower()
        if t == self.base_form.lower():
            return "base"
        for key, form in sorted(self.forms.items()):
            if form.lower() == t:
                return key
        return None

    def form(self, key: str) -> str | None:
        if key == "base":
            return self.base_form
        return self.forms.get(key)


def load_stop_tokens(path: str | Path | None = None) -> frozenset[str]:
    if path is None:
        text = resources.files("helpgen.data").joinpath("stop_tokens.txt").read_text("utf-8")
    else:
        text = Path(path).read_text("utf-8")
    return frozenset(line.strip().lower() for line in text.splitlines() if line.strip())


class Taxonomy:
    def __init__(self, entries: Iterable[SenseEntry], stop_tokens: Iterable[str] = ()):
        self.entries: dict[str, SenseEntry] = {}
        self.index: dict[tuple[str, str], set[str]] = {}
        self._hyponyms: dict[str, set[str]] = {}
        for e in entries:
            if e.sense in self.entries:
                raise TaxonomyError(f"duplicate sense {e.sense!r}")
            self.entries[e.sense] = e
            self.index.setdefault((e.lemma.lower(), e.pos), set()).add(e.sense)
        self.stop_tokens = frozenset(t.lower() for t in stop_tokens)
        self._check()
        for e in self.entries.values():
            for h in e.hypernyms:
                self._hyponyms.setdefault(h, set()).add(e.sense)
        self._ancestors = lru_cache(maxsize=None)(self._compute_ancestors)

    def _check(self) -> None:
        for e in self.entries.values():
            if sense_pos(e.sense) != e.pos:
                raise TaxonomyError(f"{e.sense}: pos field {e.pos!r} disagrees with identifier")
            for h in e.hypernyms:
                if h not in self.entries:
                    raise TaxonomyError(f"{e.sense}: unknown hypernym {h!r}")
                if self.entries[h].pos != e.pos:
                    raise TaxonomyError(f"{e.sense}: hypernym {h} has a different pos")
        # acyclicity via iterative DFS colouring
        state: dict[str, int] = {}
        for start in sorted(self.entries):
            if state.get(start):
                continue
            stack = [(start, iter(sorted(self.entries[start].hypernyms)))]
            state[start] = 1
            while stack:
                node, it = stack[-1]
                nxt = next(it, None)
                if nxt is None:
                    state[node] = 2
                    stack.pop()
                elif state.get(nxt) == 1:
                    raise TaxonomyError(f"hypernym cycle through {nxt!r}")
                elif not state.get(nxt):
                    state[nxt] = 1
                    stack.append((nxt, iter(sorted(self.entries[nxt].hypernyms))))

    def __contains__(self, sense: str) -> bool:
        return sense in self.entries

    def __len__(self) -> int:
        return len(self.entries)

    def entry(self, sense: str) -> SenseEntry:
        try:
            return self.entries[sense]
        except KeyError:
            raise UnknownSense(sense) from None

    def senses_for(self, lemma: str, pos: str) -> list[str]:
        return sorted(self.index.get((lemma.lower(), pos), ()), key=lambda s: (sense_number(s), s))

    def hyponyms(self, sense: str) -> frozenset[str]:
        self.entry(sense)
        return frozenset(self._hyponyms.get(sense, ()))

    def _compute_ancestors(self, sense: str) -> frozenset[str]:
        out: set[str] = set()
        queue = deque(self.entries[sense].hypernyms)
        while queue:
            s = queue.popleft()
            if s not in out:
                out.add(s)
                queue.extend(self.entries[s].hypernyms)
        return frozenset(out)

    def ancestors(self, sense: str) -> frozenset[str]:
        self.entry(sense)
        return self._ancestors(sense)

    def is_hyponym_or_equal(self, a: str, b: str) -> bool:
        """a ⊑ b: every a is a b."""
        return a == b or b in self.ancestors(a)

    @classmethod
    def from_records(cls, records: Iterable[dict], stop_tokens: Iterable[str] = ()) -> "Taxonomy":
        entries = []
        for i, r in enumerate(records):
            try:
                entries.append(SenseEntry(
                    sense=r["sense"], lemma=r["lemma"], pos=r["pos"],
                    gloss=tuple(t.lower() for t in r.get("gloss", [])),
                    hypernyms=frozenset(r.get("hypernyms", [])),
                    forms=dict(r.get("forms", {}))))
            except (KeyError, TypeError) as e:
                raise TaxonomyError(f"record {i + 1}: missing or bad field {e}") from None
        return cls(entries, stop_tokens)

    @classmethod
    def load(cls, path: str | Path | None = None,
             stop_tokens_path: str | Path | None = None) -> "Taxonomy":
        if path is None:
            text = resources.files("helpgen.data").joinpath("taxonomy.jsonl").read_text("utf-8")
        else:
            text = Path(path).read_text("utf-8")
        records = []
        for lineno, line in enumerate(text.splitlines(), start=1):
            if not line.strip():
                continue
            try:
                records.append(json.loads(line))
            except json.JSONDecodeError as e:
                raise TaxonomyError(f"line {lineno}: malformed JSON: {e.msg}") from None
        return cls.from_records(records, load_stop_tokens(stop_tokens_path))


def compare(a: str, b: str, tax: Taxonomy) -> Relation:
    tax.entry(a)
    tax.entry(b)
    if a == b:
        return Relation.EQUAL
    if a in tax.ancestors(b):
        return Relation.BROADER
    if b in tax.ancestors(a):
        return Relation.NARROWER
    return Relation.INCOMPARABLE


def replacements_for(sense: str, direction: Direction, tax: Taxonomy, max_depth: int = 1) -> list[str]:
    """Hypernyms (Broaden) or hyponyms (Narrow) within ``max_depth`` edges, nearest first."""
    if max_depth < 1:
        raise ValueError("max_depth must be at least 1")
    tax.entry(sense)
    step = (lambda s: tax.entry(s).hypernyms) if direction is Direction.BROADEN else tax.hyponyms
    depth = {sense: 0}
    frontier = [sense]
    for d in range(1, max_depth + 1):
        nxt = []
        for s in frontier:
            for t in step(s):
                if t not in depth:
                    depth[t] = d
                    nxt.append(t)
        frontier = nxt
    del depth[sense]
    return sorted(depth, key=lambda s: (depth[s], s))


def _content(tokens: Iterable[str], stop: frozenset[str]) -> set[str]:
    out = set()
    for tok in tokens:
        for part in tok.lower().replace("_", " ").split():
            if part not in stop:
                out.add(part)
    return out


def lesk(lemma: str, pos: str, context: list[str], tax: Taxonomy) -> str:
    """Simplified Lesk: the candidate whose gloss shares most context tokens.

    Overlap counts distinct tokens after lowercasing and stop-token removal;
    ties go to the lowest sense number.
    """
    candidates = tax.senses_for(lemma, pos)
    if not candidates:
        raise SenseUnavailable(f"{lemma}.{pos}")
    ctx = _content(context, tax.stop_tokens)
    best, best_score = candidates[0], -1
    for sense in candidates:
        score = len(ctx & _content(tax.entry(sense).gloss, tax.stop_tokens))
        if score > best_score:
            best, best_score = sense, score
    return best
