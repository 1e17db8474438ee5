"""
Lattice term syntax: AST nodes and the ASCII grammar parser.

Grammar (whitespace insignificant)::

    join  := meet ('v' meet)*
    meet  := unary ('^' unary)*
    unary := '~' unary | atom
    atom  := 'x' DIGITS | '0' | '1' | '(' join ')'
"""
import re
from dataclasses import dataclass

from cubical_lab.config import Config
from cubical_lab.utils.errors import InputError


@dataclass(frozen=True)
class Var:
    index: int


@dataclass(frozen=True)
class Const:
    value: bool


@dataclass(frozen=True)
class Meet:
    left: object
    right: object


@dataclass(frozen=True)
class Join:
    left: object
    right: object


@dataclass(frozen=True)
class Neg:
    operand: object


_TOKEN = re.compile(r"\s*(?:(x\d+)|([v^~()01]))")


def tokenize(text):
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        match = _TOKEN.match(text, pos)
        if match is None:
            raise InputError(f"Unexpected character {text[pos:].strip()[:1]!r} at position {pos} in {text!r}")
        tokens.append(match.group(1) or match.group(2))
        pos = match.end()
    return tokens


class _Parser:
    def __init__(self, text):
        self.text = text
        self.tokens = tokenize(text)
        self.pos = 0
        self.nesting = 0

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self, expected=None):
        token = self.peek()
        if token is None:
            raise InputError(f"Unexpected end of term {self.text!r}")
        if expected is not None and token != expected:
            raise InputError(f"Expected {expected!r} but found {token!r} in {self.text!r}")
        self.pos += 1
        return token

    def parse(self):
        if not self.tokens:
            raise InputError("Empty term")
        term = self.join()
        if self.peek() is not None:
            raise InputError(f"Trailing input {self.peek()!r} in {self.text!r}")
        return term

    def join(self):
        term = self.meet()
        while self.peek() == "v":
            self.take()
            term = Join(term, self.meet())
        return term

    def meet(self):
        term = self.unary()
        while self.peek() == "^":
            self.take()
            term = Meet(term, self.unary())
        return term

    def _enter(self):
        self.nesting += 1
        if self.nesting > Config.MAX_TERM_DEPTH:
            raise InputError(f"Term nests deeper than {Config.MAX_TERM_DEPTH} levels")

    def unary(self):
        if self.peek() == "~":
            self.take()
            self._enter()
            term = Neg(self.unary())
            self.nesting -= 1
            return term
        return self.atom()

    def atom(self):
        token = self.take()
        if token == "(":
            self._enter()
            term = self.join()
            self.take(")")
            self.nesting -= 1
            return term
        if token in ("0", "1"):
            return Const(token == "1")
        if token.startswith("x"):
            return Var(int(token[1:]))
        raise InputError(f"Unexpected token {token!r} in {self.text!r}")


def parse_term(text):
    """Parse the ASCII lattice grammar into an AST."""
    if not isinstance(text, str):
        raise InputError(f"Term must be a string, got {type(text).__name__}")
    return _Parser(text).parse()


def max_generator(term):
    """Largest generator index used by the term, or -1 if none."""
    largest = -1
    stack = [term]
    while stack:
        node = stack.pop()
        if isinstance(node, Var):
            largest = max(largest, node.index)
        elif isinstance(node, Neg):
            stack.append(node.operand)
        elif isinstance(node, (Meet, Join)):
            stack.extend((node.left, node.right))
    return largest


def fold_term(term, var, const, meet, join, neg=None):
    """Structural fold over a term AST; long operator chains need no recursion."""
    values = []
    stack = [(term, False)]
    while stack:
        node, ready = stack.pop()
        if isinstance(node, Var):
            values.append(var(node.index))
        elif isinstance(node, Const):
            values.append(const(node.value))
        elif isinstance(node, (Meet, Join)):
            if ready:
                right = values.pop()
                left = values.pop()
                values.append((meet if isinstance(node, Meet) else join)(left, right))
            else:
                stack.extend(((node, True), (node.right, False), (node.left, False)))
        elif isinstance(node, Neg):
            if neg is None:
                raise InputError("Negation '~' is only available in the De Morgan theory")
            if ready:
                values.append(neg(values.pop()))
            else:
                stack.extend(((node, True), (node.operand, False)))
        else:
            raise InputError(f"Not a lattice term: {node!r}")
    return values.pop()
