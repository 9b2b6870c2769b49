"""
lang/parser.py
Recursive-descent parser for σ-set scripts.

    program   := { statement terminator } ;
    statement := binding | solve | check | expr ;
    binding   := IDENT "=" expr ;
    solve     := "solve" IDENT "in" expr "=" expr ;
    check     := ("assoc"|"localassoc") "(" expr "," expr "," expr ")"
               | ("group"|"af") "(" expr { "," expr } ")" ;
    expr      := diff { "+" diff } ;          fusion, left-assoc ("∪" also accepted)
    diff      := hat { "\\" hat } ;           star difference, left-assoc
    hat       := unary { "&" unary } ;        hat intersection, left-assoc
    unary     := "anti" "(" expr ")" | primary ;
    primary   := IDENT | setlit | "(" expr ")" ;
    setlit    := "{" [ ATOM { "," ATOM } ] "}" | "0" ;
    ATOM      := word [ "*" ] ;

Inside a set literal any word (names, numbers, even reserved words) is an
atom base, so `{1, 2*}` and `{in}` are literals.
"""

from __future__ import annotations

from typing import Iterable, List, Optional

from .errors import ParseError
from .lexer import Token, TokenKind, tokenize
from .nodes import (
    CHECK_ARITY,
    Anti,
    Binding,
    Check,
    Expr,
    ExprStatement,
    Fuse,
    Group,
    HatIntersect,
    SetLiteral,
    Solve,
    StarDiff,
    Statement,
    Var,
)

_ATOM_WORDS = (TokenKind.IDENT, TokenKind.NUMBER, TokenKind.KEYWORD)
_STATEMENT_END = (TokenKind.TERMINATOR, TokenKind.EOF)


class Parser:
    def __init__(self, source: str):
        self.source = source
        self.tokens: List[Token] = tokenize(source)
        self.pos = 0

    # -------------------- token helpers --------------------

    @property
    def current(self) -> Token:
        return self.tokens[self.pos]

    def peek(self, ahead: int = 1) -> Token:
        return self.tokens[min(self.pos + ahead, len(self.tokens) - 1)]

    def at(self, kind: TokenKind, text: Optional[str] = None) -> bool:
        tok = self.current
        return tok.kind is kind and (text is None or tok.text == text)

    def advance(self) -> Token:
        tok = self.current
        if tok.kind is not TokenKind.EOF:
            self.pos += 1
        return tok

    def expect(self, kind: TokenKind, text: Optional[str] = None) -> Token:
        if not self.at(kind, text):
            self.fail([f"'{text}'" if text else kind.value])
        return self.advance()

    def fail(self, expected: Iterable[str], message: Optional[str] = None):
        tok = self.current
        shown = tok.kind.value if tok.kind in _STATEMENT_END else repr(tok.text)
        raise ParseError(message or f"unexpected {shown}", tok.line, tok.column, expected)

    def skip_terminators(self) -> None:
        while self.at(TokenKind.TERMINATOR):
            self.advance()

    # -------------------- statements --------------------

    def parse_program(self) -> List[Statement]:
        statements: List[Statement] = []
        self.skip_terminators()
        while not self.at(TokenKind.EOF):
            statements.append(self.parse_statement())
            if not self.at(TokenKind.TERMINATOR) and not self.at(TokenKind.EOF):
                self.fail([TokenKind.TERMINATOR.value, TokenKind.FUSE.value,
                           TokenKind.DIFF.value, TokenKind.HAT.value])
            self.skip_terminators()
        return statements

    def parse_statement(self) -> Statement:
        start = self.current
        tok = self.current
        nxt = self.peek()
        if tok.kind is TokenKind.KEYWORD and nxt.kind is TokenKind.EQUALS:
            raise ParseError(f"cannot bind reserved word {tok.text!r}", tok.line, tok.column)

        if self.at(TokenKind.KEYWORD, "solve"):
            self.advance()
            var = self.expect(TokenKind.IDENT).text
            self.expect(TokenKind.KEYWORD, "in")
            lhs = self.parse_expr()
            self.expect(TokenKind.EQUALS)
            rhs = self.parse_expr()
            return Solve(var, lhs, rhs, text=self._text_from(start), line=start.line)

        if tok.kind is TokenKind.KEYWORD and tok.text in CHECK_ARITY:
            return self.parse_check(start)

        if tok.kind is TokenKind.IDENT and nxt.kind is TokenKind.EQUALS:
            self.advance()
            self.advance()
            expr = self.parse_expr()
            return Binding(tok.text, expr, text=self._text_from(start), line=start.line)

        expr = self.parse_expr()
        return ExprStatement(expr, text=self._text_from(start), line=start.line)

    def parse_check(self, start: Token) -> Check:
        kind = self.advance().text
        self.expect(TokenKind.LPAREN)
        args = [self.parse_expr()]
        while self.at(TokenKind.COMMA):
            self.advance()
            args.append(self.parse_expr())
        if not self.at(TokenKind.RPAREN):
            self.fail([TokenKind.COMMA.value, TokenKind.RPAREN.value])
        close = self.advance()

        low, high = CHECK_ARITY[kind]
        if len(args) < low or (high is not None and len(args) > high):
            wanted = f"exactly {low}" if low == high else f"at least {low}"
            raise ParseError(
                f"{kind} takes {wanted} argument(s), got {len(args)}", close.line, close.column
            )
        return Check(kind, tuple(args), text=self._text_from(start), line=start.line)

    def _text_from(self, start: Token) -> str:
        last = self.tokens[self.pos - 1] if self.pos > 0 else start
        return self.source[start.offset:last.end].strip()

    # -------------------- expressions --------------------

    def parse_expr(self) -> Expr:
        node = self.parse_diff()
        while self.at(TokenKind.FUSE):
            self.advance()
            node = Fuse(node, self.parse_diff())
        return node

    def parse_diff(self) -> Expr:
        node = self.parse_hat()
        while self.at(TokenKind.DIFF):
            self.advance()
            node = StarDiff(node, self.parse_hat())
        return node

    def parse_hat(self) -> Expr:
        node = self.parse_unary()
        while self.at(TokenKind.HAT):
            self.advance()
            node = HatIntersect(node, self.parse_unary())
        return node

    def parse_unary(self) -> Expr:
        if self.at(TokenKind.KEYWORD, "anti"):
            self.advance()
            self.expect(TokenKind.LPAREN)
            inner = self.parse_expr()
            self.expect(TokenKind.RPAREN)
            return Anti(inner)
        return self.parse_primary()

    def parse_primary(self) -> Expr:
        tok = self.current
        if tok.kind is TokenKind.IDENT:
            self.advance()
            return Var(tok.text)
        if tok.kind is TokenKind.NUMBER:
            if tok.text != "0":
                self.fail([], f"number {tok.text!r} is only allowed as an atom inside a set literal")
            self.advance()
            return SetLiteral(())
        if tok.kind is TokenKind.LBRACE:
            return self.parse_setlit()
        if tok.kind is TokenKind.LPAREN:
            self.advance()
            inner = self.parse_expr()
            self.expect(TokenKind.RPAREN)
            return Group(inner)
        self.fail([TokenKind.IDENT.value, TokenKind.LBRACE.value, TokenKind.LPAREN.value,
                   "'0'", "'anti'"])

    def parse_setlit(self) -> SetLiteral:
        self.expect(TokenKind.LBRACE)
        atoms: List[str] = []
        if not self.at(TokenKind.RBRACE):
            atoms.append(self.parse_atom())
            while self.at(TokenKind.COMMA):
                self.advance()
                atoms.append(self.parse_atom())
        if not self.at(TokenKind.RBRACE):
            self.fail([TokenKind.COMMA.value, TokenKind.RBRACE.value])
        self.advance()
        return SetLiteral(tuple(atoms))

    def parse_atom(self) -> str:
        if self.current.kind not in _ATOM_WORDS:
            self.fail([TokenKind.IDENT.value, TokenKind.NUMBER.value])
        base = self.advance().text
        if self.at(TokenKind.STAR):
            self.advance()
            return base + "*"
        return base


def parse(source: str) -> List[Statement]:
    """Parse a whole script into statements."""
    return Parser(source).parse_program()


def parse_expression(text: str) -> Expr:
    """Parse a single expression (used for one-shot CLI arguments)."""
    parser = Parser(text)
    parser.skip_terminators()
    expr = parser.parse_expr()
    parser.skip_terminators()
    if not parser.at(TokenKind.EOF):
        parser.fail([TokenKind.EOF.value, TokenKind.FUSE.value, TokenKind.DIFF.value, TokenKind.HAT.value])
    return expr
