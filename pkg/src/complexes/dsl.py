"""
Text form of subcomplex expressions, used by the CLI and constraint files.

Grammar (``&`` binds tighter than ``|``)::

    expr     := term ('|' term)*
    term     := factor ('&' factor)*
    factor   := '(' expr ')' | atom
    atom     := 'full' ['(' INT ')']
              | 'skeleton' '(' INT ')'
              | 'induced' '(' vertices ')'
              | 'atmost' '(' INT ';' vertices ')'
              | 'rainbow' ['(' vertices (';' vertices)* ')']
    vertices := item (',' item)*
    item     := INT | INT '..' INT

Whitespace is ignored. Errors carry the 0-based character position.
"""
import re
from typing import List, NamedTuple, Set

from ..core.errors import DSLParseError
from .subcomplex import (
    AtMostSInS,
    ComplexIntersection,
    ComplexUnion,
    FullSimplex,
    Induced,
    Rainbow,
    Skeleton,
)

_TOKEN = re.compile(r"\s*(?:(?P<int>-?\d+)|(?P<name>[A-Za-z_]+)|(?P<range>\.\.)|(?P<op>[()&|,;]))")


class _Token(NamedTuple):
    kind: str
    text: str
    position: int


def _tokenize(text: str) -> List[_Token]:
    tokens = []
    position = 0
    while position < len(text):
        if text[position].isspace():
            position += 1
            continue
        match = _TOKEN.match(text, position)
        if not match:
            raise DSLParseError(f"Unexpected character {text[position]!r}", position, text)
        kind = match.lastgroup
        start = match.start(kind)
        tokens.append(_Token(kind, match.group(kind), start))
        position = match.end()
    tokens.append(_Token("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.index = 0

    @property
    def current(self) -> _Token:
        return self.tokens[self.index]

    def fail(self, message: str):
        raise DSLParseError(message, self.current.position, self.text)

    def advance(self) -> _Token:
        token = self.current
        self.index += 1
        return token

    def expect(self, text: str) -> _Token:
        if self.current.text != text or self.current.kind == "end":
            found = "end of input" if self.current.kind == "end" else repr(self.current.text)
            self.fail(f"Expected {text!r}, found {found}")
        return self.advance()

    def integer(self) -> int:
        if self.current.kind != "int":
            self.fail("Expected an integer")
        return int(self.advance().text)

    def parse(self):
        node = self.expr()
        if self.current.kind != "end":
            self.fail(f"Unexpected {self.current.text!r}")
        return node

    def expr(self):
        node = self.term()
        while self.current.text == "|":
            self.advance()
            node = ComplexUnion(left=node, right=self.term())
        return node

    def term(self):
        node = self.factor()
        while self.current.text == "&":
            self.advance()
            node = ComplexIntersection(left=node, right=self.factor())
        return node

    def factor(self):
        if self.current.text == "(":
            self.advance()
            node = self.expr()
            self.expect(")")
            return node
        return self.atom()

    def vertices(self) -> Set[int]:
        result: Set[int] = set()
        while True:
            start_token = self.current
            start = self.integer()
            if self.current.kind == "range":
                self.advance()
                stop = self.integer()
                if stop < start:
                    raise DSLParseError("Empty vertex range", start_token.position, self.text)
                result.update(range(start, stop + 1))
            else:
                result.add(start)
            if start < 0:
                raise DSLParseError("Vertex indices must be nonnegative", start_token.position, self.text)
            if self.current.text != ",":
                return result
            self.advance()

    def atom(self):
        if self.current.kind != "name":
            found = "end of input" if self.current.kind == "end" else repr(self.current.text)
            self.fail(f"Expected a subcomplex, found {found}")
        name_token = self.advance()
        name = name_token.text.lower()

        if name == "full":
            if self.current.text == "(":
                self.advance()
                n = self.integer()
                self.expect(")")
                return FullSimplex(n=n)
            return FullSimplex()
        if name == "skeleton":
            self.expect("(")
            k_token = self.current
            k = self.integer()
            if k < -1:
                raise DSLParseError("skeleton needs k >= -1", k_token.position, self.text)
            self.expect(")")
            return Skeleton(k=k)
        if name == "induced":
            self.expect("(")
            vertices = self.vertices()
            self.expect(")")
            return Induced(vertices=frozenset(vertices))
        if name == "atmost":
            self.expect("(")
            s_token = self.current
            s = self.integer()
            if s < 0:
                raise DSLParseError("atmost needs s >= 0", s_token.position, self.text)
            self.expect(";")
            vertices = self.vertices()
            self.expect(")")
            return AtMostSInS(s=s, vertices=frozenset(vertices))
        if name == "rainbow":
            if self.current.text != "(":
                return Rainbow()
            self.advance()
            classes = [tuple(sorted(self.vertices()))]
            while self.current.text == ";":
                self.advance()
                classes.append(tuple(sorted(self.vertices())))
            self.expect(")")
            seen: Set[int] = set()
            for color_class in classes:
                if seen.intersection(color_class):
                    raise DSLParseError("Rainbow classes overlap", name_token.position, self.text)
                seen.update(color_class)
            return Rainbow(classes=tuple(classes))
        raise DSLParseError(f"Unknown subcomplex {name_token.text!r}", name_token.position, self.text)


def parse_subcomplex(text: str):
    """Parse the DSL form into a Subcomplex expression tree."""
    if not isinstance(text, str):
        raise DSLParseError("Subcomplex expression must be a string", 0, "")
    return _Parser(text).parse()
