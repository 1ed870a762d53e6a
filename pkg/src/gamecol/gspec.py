"""Graph-spec mini-language for the CLI and the service.

Examples: "complete:4", "cocktail:3", "cartesian(complete:3,path:3)",
"square(path:3)", "union(complete:2,complete:1)", "add_isolated(cycle:4)",
"g6:D?{" and "file:graphs.g6" (these two only at top level, since graph6
text may contain the grammar's own punctuation).
"""

from __future__ import annotations

from pathlib import Path

from . import graphs
from .graph6 import parse_graph6
from .graphs import Graph


class GraphSpecError(ValueError):
    """Parse failure with a position pointing into the spec string."""

    def __init__(self, text: str, pos: int, message: str) -> None:
        marker = " " * pos + "^"
        super().__init__(f"{message} at position {pos}\n  {text}\n  {marker}")
        self.pos = pos


_GENERATORS = {
    "complete": graphs.complete,
    "path": graphs.path,
    "cycle": graphs.cycle,
    "star": graphs.star,
    "cocktail": graphs.cocktail_party,
    "empty": graphs.empty_graph,
}

_FUNCTIONS = {
    "cartesian": (2, graphs.cartesian_product),
    "strong": (2, graphs.strong_product),
    "square": (1, graphs.graph_square),
    "union": (2, graphs.union),
    "add_isolated": (1, graphs.add_isolated),
}


class _Parser:
    def __init__(self, text: str) -> None:
        self.text = text
        self.pos = 0

    def fail(self, message: str, pos: int | None = None) -> GraphSpecError:
        return GraphSpecError(self.text, self.pos if pos is None else pos, message)

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str) -> None:
        if self.peek() != ch:
            raise self.fail(f"expected {ch!r}")
        self.pos += 1

    def name(self) -> tuple[str, int]:
        start = self.pos
        while self.peek().isalnum() or self.peek() == "_":
            self.pos += 1
        if self.pos == start:
            raise self.fail("expected a name")
        return self.text[start:self.pos], start

    def integer(self) -> int:
        start = self.pos
        while self.peek().isdigit():
            self.pos += 1
        if self.pos == start:
            raise self.fail("expected an integer")
        return int(self.text[start:self.pos])

    def expr(self) -> Graph:
        word, start = self.name()
        if word in _FUNCTIONS:
            arity, fn = _FUNCTIONS[word]
            self.expect("(")
            args = [self.expr()]
            while self.peek() == ",":
                self.pos += 1
                args.append(self.expr())
            self.expect(")")
            if len(args) != arity:
                raise self.fail(
                    f"{word} takes {arity} argument(s), got {len(args)}", start
                )
            return fn(*args)
        if word in _GENERATORS:
            self.expect(":")
            n = self.integer()
            return _GENERATORS[word](n)
        if word in ("g6", "file"):
            raise self.fail(f"{word}: literals are only allowed at top level", start)
        raise self.fail(f"unknown generator or function {word!r}", start)


def parse_graph_spec(text: str) -> Graph:
    """Parse a graph spec string into a Graph."""
    spec = text.strip()
    if spec.startswith("g6:"):
        return parse_graph6(spec[3:])
    if spec.startswith("file:"):
        payload = Path(spec[5:]).read_text()
        first = payload.strip().splitlines()
        if not first:
            raise GraphSpecError(spec, 5, "file holds no graph6 line")
        return parse_graph6(first[0])
    parser = _Parser(spec)
    g = parser.expr()
    if parser.pos != len(spec):
        raise parser.fail("trailing characters after spec")
    return g
