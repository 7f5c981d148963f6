# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled Java lexer: the hot kernel of project indexing.

Must stay token-for-token identical to ``_scanner_py.tokenize``; the test
suite cross-checks the two on generated inputs.
"""

DEF K_IDENT = 1
DEF K_NUMBER = 2
DEF K_STRING = 3
DEF K_PUNCT = 4


cdef inline bint _is_ident_start(Py_UCS4 c):
    return (u'a' <= c <= u'z') or (u'A' <= c <= u'Z') or c == u'_' or c == u'$'


cdef inline bint _is_ident_part(Py_UCS4 c):
    return _is_ident_start(c) or (u'0' <= c <= u'9')


cdef inline bint _is_number_part(Py_UCS4 c):
    return (u'0' <= c <= u'9') or (u'a' <= c <= u'z') or (u'A' <= c <= u'Z') \
        or c == u'_' or c == u'.'


cdef inline bint _is_space(Py_UCS4 c):
    # Mirrors what `\s` matches for the ASCII range used by the fallback.
    return c == u' ' or c == u'\t' or c == u'\n' or c == u'\r' or c == u'\f' or c == u'\v'


def tokenize(unicode text):
    """Lex ``text`` into ``(kind, start, end)`` tokens."""
    cdef Py_ssize_t i = 0, start, n = len(text)
    cdef Py_UCS4 c, quote
    cdef list tokens = []
    while i < n:
        c = text[i]
        if _is_space(c):
            i += 1
            continue
        start = i
        if c == u'/' and i + 1 < n:
            if text[i + 1] == u'/':
                i += 2
                while i < n and text[i] != u'\n':
                    i += 1
                continue
            if text[i + 1] == u'*':
                i += 2
                while i + 1 < n and not (text[i] == u'*' and text[i + 1] == u'/'):
                    i += 1
                i = i + 2 if i + 1 < n else n
                continue
        if c == u'"' or c == u"'":
            quote = c
            i += 1
            while i < n:
                c = text[i]
                if c == u'\\':
                    i += 2 if i + 1 < n else 1
                elif c == quote:
                    i += 1
                    break
                elif c == u'\n':
                    break
                else:
                    i += 1
            tokens.append((K_STRING, start, i))
            continue
        if _is_ident_start(c):
            i += 1
            while i < n and _is_ident_part(text[i]):
                i += 1
            tokens.append((K_IDENT, start, i))
            continue
        if u'0' <= c <= u'9':
            i += 1
            while i < n and _is_number_part(text[i]):
                i += 1
            tokens.append((K_NUMBER, start, i))
            continue
        i += 1
        tokens.append((K_PUNCT, start, i))
    return tokens
