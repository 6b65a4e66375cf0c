"""
Newick reading and canonical writing for phylogenetic trees.

Canonical form: root at the internal vertex next to leaf 1, order every
vertex's children by the smallest leaf label below them, print leaves as
bare integers, no lengths, no internal names.  Two trees are leaf-label
isomorphic iff their canonical strings are equal.
"""

from __future__ import annotations

import re

from .errors import DegreeViolation, InvalidTree, ParseError
from .trees import PhylogeneticTree

_TOKEN = re.compile(r"\s*(?:(\()|(\))|(,)|(;)|(:)|([^\s(),;:\[\]]+))")


def _strip_comments(text: str) -> str:
    out = []
    depth = 0
    for ch in text:
        if ch == "[":
            depth += 1
        elif ch == "]":
            if depth == 0:
                raise ParseError("unbalanced ']' in Newick text")
            depth -= 1
        elif depth == 0:
            out.append(ch)
    if depth:
        raise ParseError("unterminated '[' comment in Newick text")
    return "".join(out)


def _tokenize(text: str) -> list[str]:
    text = _strip_comments(text)
    tokens = []
    pos = 0
    end = len(text.rstrip())
    while pos < end:
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            raise ParseError(f"unexpected character {text[pos]!r} at offset {pos}")
        tokens.append(m.group(m.lastindex))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, tokens: list[str]):
        self.tokens = tokens
        self.pos = 0
        self.edges: list[tuple[int, int]] = []
        self.leaves: list[int] = []
        self.next_internal = -1

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self, expected=None):
        tok = self.peek()
        if tok is None:
            raise ParseError("unexpected end of Newick text")
        if expected is not None and tok != expected:
            raise ParseError(f"expected {expected!r}, found {tok!r}")
        self.pos += 1
        return tok

    def length(self):
        if self.peek() == ":":
            self.take()
            tok = self.take()
            try:
                float(tok)
            except ValueError:
                raise ParseError(f"bad branch length {tok!r}") from None

    def subtree(self) -> int:
        tok = self.peek()
        if tok == "(":
            self.take()
            v = self.next_internal
            self.next_internal -= 1
            children = [self.subtree()]
            while self.peek() == ",":
                self.take()
                children.append(self.subtree())
            self.take(")")
            nxt = self.peek()
            if nxt is not None and nxt not in "(),;:":
                self.take()  # internal node name, ignored
            self.length()
            for c in children:
                self.edges.append((v, c))
            return v
        if tok is None or tok in "(),;:":
            raise ParseError(f"expected a leaf label, found {tok!r}")
        self.take()
        if not tok.isdigit():
            raise ParseError(f"leaf label {tok!r} is not a decimal integer")
        label = int(tok)
        if label < 1:
            raise ParseError(f"leaf label {label} must be >= 1")
        self.leaves.append(label)
        self.length()
        return label


def _suppress(adj: dict[int, set[int]], strict: bool) -> None:
    """Remove internal vertices of degree <= 2 in place."""
    todo = [v for v in adj if v < 0]
    while todo:
        v = todo.pop()
        if v not in adj:
            continue
        nb = adj[v]
        if len(nb) > 2:
            continue
        if strict:
            raise DegreeViolation(f"internal vertex of degree {len(nb)} in Newick input")
        del adj[v]
        for w in nb:
            adj[w].discard(v)
        if len(nb) == 2:
            a, b = nb
            adj[a].add(b)
            adj[b].add(a)
        todo.extend(w for w in nb if w < 0)


def parse_newick(text: str, n: int | None = None, *, strict: bool = False) -> PhylogeneticTree:
    """Read a Newick tree whose leaves are labelled 1..n.

    Edge lengths, internal names and ``[...]`` comments are discarded.  Vertices
    of degree two (e.g. the root of a rooted binary tree) are suppressed
    unless ``strict`` is set, in which case they raise ``DegreeViolation``.
    """
    p = _Parser(_tokenize(text))
    if p.peek() is None:
        raise ParseError("empty Newick text")
    root = p.subtree()
    p.take(";")
    if p.peek() is not None:
        raise ParseError(f"trailing text after ';': {p.peek()!r}")
    if root > 0:
        raise ParseError("a single leaf is not a tree")

    labels = p.leaves
    if len(set(labels)) != len(labels):
        dup = sorted({x for x in labels if labels.count(x) > 1})
        raise ParseError(f"duplicate leaf labels {dup}")
    k = len(labels) if n is None else n
    if sorted(labels) != list(range(1, k + 1)):
        raise ParseError(f"leaf labels must be exactly 1..{k}, got {sorted(labels)}")

    adj: dict[int, set[int]] = {}
    for u, v in p.edges:
        adj.setdefault(u, set()).add(v)
        adj.setdefault(v, set()).add(u)
    _suppress(adj, strict)
    edges = [(u, v) for u in adj for v in adj[u] if u < v]
    try:
        return PhylogeneticTree(k, edges)
    except DegreeViolation:
        raise
    except InvalidTree as exc:
        raise ParseError(str(exc)) from exc
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def to_newick(t: PhylogeneticTree) -> str:
    """Canonical Newick string of ``t``."""
    adj = t._adj

    def render(v: int, parent: int) -> tuple[int, str]:
        if v > 0:
            return v, str(v)
        parts = sorted(render(w, v) for w in adj[v] if w != parent)
        return parts[0][0], "(" + ",".join(s for _, s in parts) + ")"

    root = adj[1][0]
    parts = sorted(render(w, root) for w in adj[root])
    return "(" + ",".join(s for _, s in parts) + ");"
