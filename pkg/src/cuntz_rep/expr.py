# -*- coding: utf-8 -*-
"""
Created on Tuesday, 13th October 2026 9:32:40 am
===============================================================================
@filename:  expr.py
@author:    cuntz-rep developers
@project:   cuntz-rep
@purpose:   the expression language of the command line: parsing, alphabet
            checking, closed-form evaluation, printing and the matching
            oracle model of an expression.
===============================================================================
"""
import logging
import re
from dataclasses import dataclass, field
from functools import lru_cache, reduce
from typing import Iterator, NamedTuple, Optional, Union

from cuntz_rep.endocalc import (
    ENDOS,
    PermEndo,
    branch_decomposition,
    endo_power,
    endo_tensor,
)
from cuntz_rep.oracle import (
    DepthError,
    TruncatedBFS,
    canonical_bfs,
    compose_bfs,
    product_bfs,
    sum_bfs,
)
from cuntz_rep.repcalc import (
    OMEGA,
    Chain,
    Decomposition,
    Multiplicity,
    RepClass,
    mk_chain,
    mk_cycle,
    tensor,
    tensor_power,
)
from cuntz_rep.words import LassoWord

logger = logging.getLogger(__name__)

Span = tuple[int, int]
Value = Union[Decomposition, PermEndo]

TOKEN_RE = re.compile(
    r"""
    (?P<space>\s+)
  | (?P<tensor>\(x\))
  | (?P<dsum>\(\+\))
  | (?P<mult>\[x(?:\d+|inf)\])
  | (?P<lit>P\s*\((?P<body>[^()]*)\))
  | (?P<path>endo:[^\s()]+)
  | (?P<name>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<caret>\^)
  | (?P<num>\d+)
  | (?P<lparen>\()
  | (?P<rparen>\))
    """,
    re.VERBOSE,
)
BODY_RE = re.compile(r"^\s*(\d+)\s*;(.*)$", re.DOTALL)


class ExprSyntaxError(ValueError):
    """
    Raised when an expression does not parse.
    """

    def __init__(self, message: str, position: int) -> None:
        super().__init__(f"{message} at position {position}")
        self.position = position


class ExprTypeError(ValueError):
    """
    Raised when a parsed expression mixes alphabets or kinds.
    """

    def __init__(self, message: str, span: Span) -> None:
        super().__init__(f"{message} at {span[0]}-{span[1]}")
        self.span = span


@dataclass(frozen=True)
class RepLiteral:
    rep: RepClass
    span: Span = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class EndoRef:
    name: str
    span: Span = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class Tensor:
    left: "Expr"
    right: "Expr"
    span: Span = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class DirectSum:
    left: "Expr"
    right: "Expr"
    span: Span = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class Compose:
    rep: "Expr"
    endo: "Expr"
    span: Span = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class Power:
    base: "Expr"
    n: int
    span: Span = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class Multiple:
    base: "Expr"
    count: Multiplicity
    span: Span = field(default=(0, 0), compare=False)


Expr = Union[RepLiteral, EndoRef, Tensor, DirectSum, Compose, Power, Multiple]


class Token(NamedTuple):
    kind: str
    text: str
    start: int
    end: int


class ExprType(NamedTuple):
    """
    What an expression denotes: a representation or an endomorphism, and
    over how many letters.
    """

    kind: str
    alphabet: int


def tokenize(text: str) -> list[Token]:
    """
    Splits an expression into tokens, whitespace dropped.

    Raises:
        ExprSyntaxError: on a character no token starts with
    """
    tokens = []
    pos = 0
    while pos < len(text):
        match = TOKEN_RE.match(text, pos)
        if match is None:
            raise ExprSyntaxError(f"unexpected character {text[pos]!r}", pos)
        kind = match.lastgroup
        if kind != "space":
            tokens.append(Token(str(kind), match.group(), pos, match.end()))
        pos = match.end()
    return tokens


def _letters(text: str, offset: int) -> tuple[int, ...]:
    letters = []
    for item in re.finditer(r"\S+", text):
        if not item.group().isdigit():
            raise ExprSyntaxError(
                f"bad letter {item.group()!r}", offset + item.start()
            )
        letters.append(int(item.group()))
    return tuple(letters)


def _literal(token: Token) -> RepClass:
    start = token.text.index("(") + 1
    body = token.text[start:-1]
    offset = token.start + start
    match = BODY_RE.match(body)
    if match is None:
        raise ExprSyntaxError("expected 'P(N; letters)'", offset)
    n = int(match.group(1))
    rest = match.group(2)
    rest_offset = offset + match.start(2)
    try:
        if "|" not in rest:
            return mk_cycle(n, _letters(rest, rest_offset))
        bar = rest.index("|")
        prefix = _letters(rest[:bar], rest_offset)
        cycle = _letters(rest[bar + 1 :], rest_offset + bar + 1)
        return mk_chain(n, LassoWord(n, prefix, cycle))
    except ExprSyntaxError:
        raise
    except (TypeError, ValueError) as e:
        raise ExprSyntaxError(str(e), offset) from e


class _Parser:
    """
    Recursive descent over the token list. Loosest to tightest binding:
    (+), (x), o, then the postfix ^n and [xK].
    """

    def __init__(self, text: str) -> None:
        self.text = text
        self.tokens = tokenize(text)
        self.index = 0

    def peek(self) -> Optional[Token]:
        if self.index < len(self.tokens):
            return self.tokens[self.index]
        return None

    def advance(self) -> Token:
        token = self.peek()
        if token is None:
            raise ExprSyntaxError("unexpected end of input", len(self.text))
        self.index += 1
        return token

    def expect(self, kind: str) -> Token:
        token = self.advance()
        if token.kind != kind:
            raise ExprSyntaxError(
                f"expected {kind}, found {token.text!r}", token.start
            )
        return token

    def at(self, kind: str, text: Optional[str] = None) -> bool:
        token = self.peek()
        if token is None or token.kind != kind:
            return False
        return text is None or token.text == text

    def parse(self) -> Expr:
        expr = self.direct_sum()
        token = self.peek()
        if token is not None:
            raise ExprSyntaxError(
                f"unexpected {token.text!r}", token.start
            )
        return expr

    def direct_sum(self) -> Expr:
        left = self.tensor()
        while self.at("dsum"):
            self.advance()
            right = self.tensor()
            left = DirectSum(left, right, (left.span[0], right.span[1]))
        return left

    def tensor(self) -> Expr:
        left = self.compose()
        while self.at("tensor"):
            self.advance()
            right = self.compose()
            left = Tensor(left, right, (left.span[0], right.span[1]))
        return left

    def compose(self) -> Expr:
        left = self.postfix()
        while self.at("name", "o"):
            self.advance()
            right = self.postfix()
            left = Compose(left, right, (left.span[0], right.span[1]))
        return left

    def postfix(self) -> Expr:
        base = self.primary()
        while True:
            if self.at("caret"):
                self.advance()
                token = self.expect("num")
                n = int(token.text)
                if n < 1:
                    raise ExprSyntaxError("powers start at 1", token.start)
                base = Power(base, n, (base.span[0], token.end))
            elif self.at("mult"):
                token = self.advance()
                count = token.text[2:-1]
                mult: Multiplicity = OMEGA if count == "inf" else int(count)
                if mult < 1:
                    raise ExprSyntaxError(
                        "multiplicities start at 1", token.start
                    )
                base = Multiple(base, mult, (base.span[0], token.end))
            else:
                return base

    def primary(self) -> Expr:
        token = self.advance()
        if token.kind == "lit":
            return RepLiteral(_literal(token), (token.start, token.end))
        if token.kind == "path":
            return EndoRef(token.text, (token.start, token.end))
        if token.kind == "name" and token.text != "o":
            if token.text not in ENDOS:
                raise ExprSyntaxError(
                    f"unknown endomorphism {token.text!r}", token.start
                )
            return EndoRef(token.text, (token.start, token.end))
        if token.kind == "lparen":
            inner = self.direct_sum()
            self.expect("rparen")
            return inner
        raise ExprSyntaxError(f"unexpected {token.text!r}", token.start)


def parse(text: str) -> Expr:
    """
    Parses a representation or endomorphism expression.

    Args:
        text (str): e.g. `P(2; 1 2)^3` or `P(4; 1) o rho`

    Raises:
        ExprSyntaxError: with the position of the offending character

    Returns:
        Expr: the syntax tree
    """
    expr = _Parser(text).parse()
    logger.debug("parsed %r", text)
    return expr


@lru_cache(maxsize=None)
def resolve_endo(name: str) -> PermEndo:
    """
    Looks up a built-in endomorphism, or loads `endo:<path>` from JSON.
    """
    if name.startswith("endo:"):
        return PermEndo.load(name[len("endo:") :])
    return ENDOS[name]


def check(expr: Expr) -> ExprType:
    """
    Checks that every node combines operands of the right kind over
    matching alphabets.

    Args:
        expr (Expr): a parsed expression

    Raises:
        ExprTypeError: with the span of the first offending node

    Returns:
        ExprType: the kind and alphabet of the whole expression
    """
    if isinstance(expr, RepLiteral):
        return ExprType("rep", expr.rep.alphabet)
    if isinstance(expr, EndoRef):
        return ExprType("endo", resolve_endo(expr.name).alphabet)
    if isinstance(expr, Tensor):
        left, right = check(expr.left), check(expr.right)
        if left.kind != right.kind:
            raise ExprTypeError(
                f"cannot tensor a {left.kind} with a {right.kind}", expr.span
            )
        return ExprType(left.kind, left.alphabet * right.alphabet)
    if isinstance(expr, DirectSum):
        left, right = check(expr.left), check(expr.right)
        if left.kind != "rep" or right.kind != "rep":
            raise ExprTypeError("only representations add", expr.span)
        if left.alphabet != right.alphabet:
            raise ExprTypeError(
                f"alphabet mismatch {left.alphabet} vs {right.alphabet}",
                expr.span,
            )
        return left
    if isinstance(expr, Compose):
        rep, endo = check(expr.rep), check(expr.endo)
        if rep.kind != "rep" or endo.kind != "endo":
            raise ExprTypeError(
                "composition needs a representation on the left and an "
                "endomorphism on the right",
                expr.span,
            )
        if rep.alphabet != endo.alphabet:
            raise ExprTypeError(
                f"alphabet mismatch {rep.alphabet} vs {endo.alphabet}",
                expr.span,
            )
        return rep
    if isinstance(expr, Power):
        base = check(expr.base)
        return ExprType(base.kind, base.alphabet**expr.n)
    base = check(expr.base)
    if base.kind != "rep":
        raise ExprTypeError("only representations have multiples", expr.span)
    return base


def _value(expr: Expr, depth_budget: int) -> Value:
    if isinstance(expr, RepLiteral):
        return Decomposition.from_class(expr.rep)
    if isinstance(expr, EndoRef):
        return resolve_endo(expr.name)
    if isinstance(expr, Tensor):
        left = _value(expr.left, depth_budget)
        right = _value(expr.right, depth_budget)
        if isinstance(left, PermEndo) and isinstance(right, PermEndo):
            return endo_tensor(left, right)
        assert isinstance(left, Decomposition)
        assert isinstance(right, Decomposition)
        return tensor(left, right)
    if isinstance(expr, Power):
        base = _value(expr.base, depth_budget)
        if isinstance(base, PermEndo):
            return endo_power(base, expr.n)
        return tensor_power(base, expr.n)
    if isinstance(expr, DirectSum):
        left = _value(expr.left, depth_budget)
        right = _value(expr.right, depth_budget)
        assert isinstance(left, Decomposition)
        assert isinstance(right, Decomposition)
        return left + right
    if isinstance(expr, Multiple):
        base = _value(expr.base, depth_budget)
        assert isinstance(base, Decomposition)
        return base.scaled(expr.count)
    rep = _value(expr.rep, depth_budget)
    endo = _value(expr.endo, depth_budget)
    assert isinstance(rep, Decomposition)
    assert isinstance(endo, PermEndo)
    result = branch_decomposition(rep, endo, depth_budget)
    if not result.complete:
        raise DepthError(
            f"branching law stayed incomplete up to radius {depth_budget}"
        )
    return result.decomposition


def evaluate(expr: Expr, depth_budget: int = 8) -> Value:
    """
    Evaluates an expression in closed form. Branching laws are the one
    place the oracle is consulted.

    Args:
        expr (Expr): a parsed expression
        depth_budget (int, optional): largest oracle radius for branching
            laws. Defaults to 8.

    Raises:
        ExprTypeError: if the expression does not check
        DepthError: if a branching law is still incomplete at the budget

    Returns:
        Value: a Decomposition, or a PermEndo for endomorphism expressions
    """
    check(expr)
    return _value(expr, depth_budget)


_PRECEDENCE = {DirectSum: 1, Tensor: 2, Compose: 3, Power: 4, Multiple: 4}
_OPERATORS = {DirectSum: "(+)", Tensor: "(x)", Compose: "o"}


def _wrap(expr: Expr, level: int, strict: bool) -> str:
    text = to_text(expr)
    inner = _PRECEDENCE.get(type(expr), 5)
    if inner < level or (strict and inner == level):
        return f"({text})"
    return text


def to_text(expr: Expr) -> str:
    """
    Prints an expression with just the parentheses parse needs to read it
    back as the same tree.
    """
    if isinstance(expr, RepLiteral):
        return str(expr.rep)
    if isinstance(expr, EndoRef):
        return expr.name
    if isinstance(expr, (DirectSum, Tensor)):
        level = _PRECEDENCE[type(expr)]
        left = _wrap(expr.left, level, strict=False)
        right = _wrap(expr.right, level, strict=True)
        return f"{left} {_OPERATORS[type(expr)]} {right}"
    if isinstance(expr, Compose):
        left = _wrap(expr.rep, 3, strict=False)
        right = _wrap(expr.endo, 3, strict=True)
        return f"{left} o {right}"
    if isinstance(expr, Power):
        return f"{_wrap(expr.base, 4, strict=False)}^{expr.n}"
    count = "inf" if expr.count == OMEGA else str(expr.count)
    return f"{_wrap(expr.base, 4, strict=False)} [x{count}]"


def children(expr: Expr) -> tuple[Expr, ...]:
    """
    Returns:
        tuple[Expr, ...]: the direct subexpressions, left to right
    """
    if isinstance(expr, (Tensor, DirectSum)):
        return (expr.left, expr.right)
    if isinstance(expr, Compose):
        return (expr.rep, expr.endo)
    if isinstance(expr, (Power, Multiple)):
        return (expr.base,)
    return ()


def literals(expr: Expr) -> Iterator[Union[RepLiteral, EndoRef]]:
    """
    The leaves of an expression, left to right.
    """
    if isinstance(expr, (RepLiteral, EndoRef)):
        yield expr
        return
    for child in children(expr):
        yield from literals(child)


def build_model(expr: Expr, depth: int, reach: int = 0) -> TruncatedBFS:
    """
    The truncated oracle model of a representation expression, built node
    by node without any closed-form decomposition.

    Args:
        expr (Expr): a representation expression
        depth (int): modification radius of every literal model
        reach (int, optional): chain window of every chain literal.
            Defaults to 0.

    Raises:
        ExprTypeError: for endomorphism expressions
        DepthError: for infinite multiples, or parameters out of range

    Returns:
        TruncatedBFS: the model
    """
    if check(expr).kind != "rep":
        raise ExprTypeError("only representations have models", expr.span)
    if isinstance(expr, RepLiteral):
        chain = isinstance(expr.rep, Chain)
        return canonical_bfs(expr.rep, depth, reach if chain else 0)
    if isinstance(expr, Tensor):
        return product_bfs(
            build_model(expr.left, depth, reach),
            build_model(expr.right, depth, reach),
        )
    if isinstance(expr, Power):
        base = build_model(expr.base, depth, reach)
        return reduce(product_bfs, [base] * (expr.n - 1), base)
    if isinstance(expr, DirectSum):
        return sum_bfs(
            build_model(expr.left, depth, reach),
            build_model(expr.right, depth, reach),
        )
    if isinstance(expr, Multiple):
        if expr.count == OMEGA:
            raise DepthError("an infinite multiple has no finite model")
        base = build_model(expr.base, depth, reach)
        return sum_bfs(*[base] * int(expr.count))
    assert isinstance(expr, Compose)
    endo = _value(expr.endo, depth_budget=depth)
    assert isinstance(endo, PermEndo)
    return compose_bfs(build_model(expr.rep, depth, reach), endo)
