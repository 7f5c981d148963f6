"""Pure-Python Java lexer, the fallback for the compiled extension.

Produces the exact same token stream as ``_scanner.pyx``: a list of
``(kind, start, end)`` tuples over character offsets, with comments and
whitespace dropped. String and char literals are kept as single tokens so
downstream call detection never looks inside them.
"""

from __future__ import annotations

import re

TOK_IDENT = 1
TOK_NUMBER = 2
TOK_STRING = 3
TOK_PUNCT = 4

# One master pattern; alternation order matters (comments and literals
# must win over the single-char catch-all). Unterminated literals stop at
# the end of line or end of input rather than swallowing the rest of the
# file, matching the C loop's behavior.
_MASTER = re.compile(
    r"""
      (?P<linecomment>//[^\n]*)
    | (?P<blockcomment>/\*.*?(?:\*/|\Z))
    | (?P<string>"(?:\\.|\\\Z|[^"\\\n])*(?:"|(?=\n)|\Z))
    | (?P<char>'(?:\\.|\\\Z|[^'\\\n])*(?:'|(?=\n)|\Z))
    | (?P<ident>[A-Za-z_$][A-Za-z0-9_$]*)
    | (?P<number>[0-9][0-9a-zA-Z_.]*)
    | (?P<ws>\s+)
    | (?P<punct>.)
    """,
    re.VERBOSE | re.DOTALL | re.ASCII,
)

_KIND = {
    "string": TOK_STRING,
    "char": TOK_STRING,
    "ident": TOK_IDENT,
    "number": TOK_NUMBER,
    "punct": TOK_PUNCT,
}


def tokenize(text: str) -> list[tuple[int, int, int]]:
    """Lex ``text`` into ``(kind, start, end)`` tokens."""
    tokens: list[tuple[int, int, int]] = []
    append = tokens.append
    for m in _MASTER.finditer(text):
        kind = _KIND.get(m.lastgroup)
        if kind is not None:
            append((kind, m.start(), m.end()))
    return tokens
