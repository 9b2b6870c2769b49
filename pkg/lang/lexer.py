"""
lang/lexer.py
Tokenizer for σ-set scripts.

Words are runs of identifier characters (Unicode letters, digits, '_') that do
not start with '_', so Greek bases such as α lex like any other name.
`#` starts a comment that runs to the end of the line; newlines and ';' terminate statements.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from typing import List

from .errors import LexError
from .nodes import KEYWORDS


class TokenKind(Enum):
    IDENT = "identifier"
    NUMBER = "number"
    KEYWORD = "keyword"
    LBRACE = "'{'"
    RBRACE = "'}'"
    LPAREN = "'('"
    RPAREN = "')'"
    COMMA = "','"
    STAR = "'*'"
    FUSE = "'+'"
    DIFF = "'\\'"
    HAT = "'&'"
    EQUALS = "'='"
    TERMINATOR = "end of statement"
    EOF = "end of input"


@dataclass(frozen=True)
class Token:
    kind: TokenKind
    text: str
    line: int
    column: int
    offset: int

    @property
    def end(self) -> int:
        return self.offset + len(self.text)


_PUNCTUATION = {
    "{": TokenKind.LBRACE,
    "}": TokenKind.RBRACE,
    "(": TokenKind.LPAREN,
    ")": TokenKind.RPAREN,
    ",": TokenKind.COMMA,
    "*": TokenKind.STAR,
    "+": TokenKind.FUSE,
    "∪": TokenKind.FUSE,
    "\\": TokenKind.DIFF,
    "&": TokenKind.HAT,
    "=": TokenKind.EQUALS,
    ";": TokenKind.TERMINATOR,
    "\n": TokenKind.TERMINATOR,
}

_WORD_RE = re.compile(r"\w+")


def tokenize(source: str) -> List[Token]:
    """Split `source` into tokens, ending with a single EOF token."""
    tokens: List[Token] = []
    pos, line, line_start = 0, 1, 0
    while pos < len(source):
        ch = source[pos]
        column = pos - line_start + 1

        if ch in " \t\r\ufeff":
            pos += 1
            continue
        if ch == "#":
            newline = source.find("\n", pos)
            pos = len(source) if newline < 0 else newline
            continue

        word = _WORD_RE.match(source, pos)
        if word:
            text = word.group()
            if text[0] == "_":
                raise LexError(f"name {text!r} must start with a letter", line, column)
            if text[0].isdigit():
                kind = TokenKind.NUMBER
            elif text in KEYWORDS:
                kind = TokenKind.KEYWORD
            else:
                kind = TokenKind.IDENT
            tokens.append(Token(kind, text, line, column, pos))
            pos = word.end()
            continue

        kind = _PUNCTUATION.get(ch)
        if kind is None:
            raise LexError(f"unexpected character {ch!r}", line, column)
        tokens.append(Token(kind, ch, line, column, pos))
        pos += 1
        if ch == "\n":
            line += 1
            line_start = pos

    tokens.append(Token(TokenKind.EOF, "", line, pos - line_start + 1, pos))
    return tokens
