"""Syntactic extraction of method declarations and call sites.

This is deliberately a heuristic, token-level parser: it tracks brace
nesting to know which class and method it is inside, recognizes method
headers by the ``name ( params ) [throws ...] {`` shape, and records every
``name(`` occurrence inside a method body as a raw call site. Comments and
string literals never produce tokens, so they can never produce calls.

Known, accepted approximations: methods of anonymous classes are not
indexed (their bodies are scanned as part of the enclosing method), and
``this(...)``/``super(...)`` constructor delegation is not recorded.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

from wandercode.model import MethodDecl, RawCallSite, SourceUnit
from wandercode.ingest.tokenize import TOK_IDENT, TOK_PUNCT, tokenize

logger = logging.getLogger(__name__)

CLASS_KEYWORDS = {"class", "interface", "enum", "record"}

# Identifiers that look like calls (`if (...)`) or must not be treated as
# callee names.
NOT_A_CALLEE = {
    "if", "for", "while", "switch", "catch", "return", "do", "else", "try",
    "synchronized", "assert", "throw", "this", "super", "new", "case",
    "break", "continue", "default", "instanceof", "yield",
}


@dataclass
class _Frame:
    kind: str  # "class" | "method" | "block"
    name: str = ""  # class simple name for class frames
    decl: "_PendingMethod | None" = None


@dataclass
class _PendingMethod:
    id: str
    class_name: str
    method_name: str
    arity: int
    sig_start: int


def parse_unit(unit: SourceUnit) -> tuple[list[MethodDecl], list[RawCallSite]]:
    """Extract declarations and raw call sites from one source file.

    Never raises for bad input: a file that defeats the parser yields a
    warning in the log and empty results.
    """
    try:
        return _parse(unit)
    except Exception as exc:  # degrade per-file, never abort the index
        logger.warning("failed to parse %s: %s", unit.path, exc)
        unit.class_names = []
        unit.referenced_names = set()
        return [], []


def _parse(unit: SourceUnit) -> tuple[list[MethodDecl], list[RawCallSite]]:
    text = unit.content
    toks = tokenize(text)
    n = len(toks)

    def lex(idx: int) -> str:
        _, s, e = toks[idx]
        return text[s:e]

    decls: list[MethodDecl] = []
    sites: list[RawCallSite] = []
    class_names: list[str] = []
    # Every identifier in the file, including ones inside skipped regions
    # (parameter lists, annotations); resolution uses this to decide
    # whether a class is referenced here.
    referenced = {text[ts:te] for tk, ts, te in toks if tk == TOK_IDENT}
    frames: list[_Frame] = []
    pending_class: str | None = None
    pending_method: _PendingMethod | None = None
    sig_anchor: int | None = None
    saw_eq = False
    seen_ids: set[str] = set()

    def innermost_class() -> str:
        for f in reversed(frames):
            if f.kind == "class":
                return f.name
        return ""

    def enclosing_method() -> _PendingMethod | None:
        for f in reversed(frames):
            if f.kind == "method":
                return f.decl
        return None

    def match_paren(open_idx: int) -> tuple[int, int | None]:
        """Find the index of the ``)`` matching ``(`` at open_idx.

        Returns (close_idx, arg_count); close_idx is -1 when a ``{``, ``;``
        or end of file interrupts the scan (lambda bodies, broken code),
        in which case arg_count is None.
        """
        depth = 1
        angle = 0
        commas = 0
        any_tok = False
        j = open_idx + 1
        while j < n:
            kind, s, e = toks[j]
            if kind == TOK_PUNCT:
                c = text[s]
                if c == "(":
                    depth += 1
                elif c == ")":
                    depth -= 1
                    if depth == 0:
                        return j, (0 if not any_tok else commas + 1)
                elif c in "{;":
                    return -1, None
                elif c == "<":
                    angle += 1
                elif c == ">":
                    angle = max(0, angle - 1)
                elif c == "," and depth == 1 and angle == 0:
                    commas += 1
            any_tok = True
            j += 1
        return -1, None

    def preceded_by_new(idx: int) -> bool:
        # Walk back over a possibly qualified/generic name chain to `new`.
        j = idx - 1
        while j >= 0:
            kind, s, e = toks[j]
            piece = text[s:e]
            if kind == TOK_IDENT:
                if piece == "new":
                    return True
                j -= 1
            elif kind == TOK_PUNCT and piece in ".<>,":
                j -= 1
            else:
                return False
        return False

    def finish_method(frame: _Frame, end: int) -> None:
        d = frame.decl
        if d is None or end <= d.sig_start:
            return
        if d.id in seen_ids:  # overload collapse: same name and arity
            return
        seen_ids.add(d.id)
        decls.append(
            MethodDecl(
                id=d.id,
                class_name=d.class_name,
                method_name=d.method_name,
                arity=d.arity,
                file=unit.path,
                span_start=d.sig_start,
                span_end=end,
            )
        )

    i = 0
    while i < n:
        kind, s, e = toks[i]
        if sig_anchor is None:
            sig_anchor = s

        if kind == TOK_PUNCT:
            c = text[s]
            if c == "@":
                # Annotation: skip name and optional argument list, except
                # `@interface` which must reach the class-header logic.
                if i + 1 < n and toks[i + 1][0] == TOK_IDENT and lex(i + 1) != "interface":
                    i += 2
                    while i < n and toks[i][0] == TOK_PUNCT and text[toks[i][1]] == "." \
                            and i + 1 < n and toks[i + 1][0] == TOK_IDENT:
                        i += 2
                    if i < n and toks[i][0] == TOK_PUNCT and text[toks[i][1]] == "(":
                        depth = 1
                        i += 1
                        while i < n and depth:
                            if toks[i][0] == TOK_PUNCT:
                                ch = text[toks[i][1]]
                                if ch == "(":
                                    depth += 1
                                elif ch == ")":
                                    depth -= 1
                            i += 1
                    continue
                i += 1
                continue
            if c == "{":
                if pending_class is not None:
                    frames.append(_Frame("class", name=pending_class))
                    pending_class = None
                elif pending_method is not None:
                    frames.append(_Frame("method", decl=pending_method))
                    pending_method = None
                else:
                    frames.append(_Frame("block"))
                sig_anchor = None
                saw_eq = False
                i += 1
                continue
            if c == "}":
                if frames:
                    frame = frames.pop()
                    if frame.kind == "method":
                        finish_method(frame, e)
                sig_anchor = None
                saw_eq = False
                i += 1
                continue
            if c == ";":
                sig_anchor = None
                saw_eq = False
                i += 1
                continue
            if c == "=":
                saw_eq = True
            i += 1
            continue

        if kind != TOK_IDENT:
            i += 1
            continue

        word = text[s:e]

        if word in CLASS_KEYWORDS and i + 1 < n and toks[i + 1][0] == TOK_IDENT:
            pending_class = lex(i + 1)
            class_names.append(pending_class)
            i += 2
            continue

        nxt_is_paren = (
            i + 1 < n and toks[i + 1][0] == TOK_PUNCT and text[toks[i + 1][1]] == "("
        )
        if not nxt_is_paren:
            i += 1
            continue

        in_class = bool(frames) and frames[-1].kind == "class"
        if in_class:
            close, argc = match_paren(i + 1)
            if close >= 0:
                k = close + 1
                if k < n and toks[k][0] == TOK_IDENT and lex(k) == "throws":
                    k += 1
                    while k < n and (
                        toks[k][0] == TOK_IDENT
                        or (toks[k][0] == TOK_PUNCT and text[toks[k][1]] in ".,")
                    ):
                        k += 1
                is_decl_shape = k < n and toks[k][0] == TOK_PUNCT and text[toks[k][1]] == "{"
                prev_ok = False
                if i > 0:
                    pk, ps, pe = toks[i - 1]
                    prev = text[ps:pe]
                    if pk == TOK_IDENT:
                        prev_ok = prev not in NOT_A_CALLEE and prev not in CLASS_KEYWORDS
                    elif pk == TOK_PUNCT:
                        prev_ok = prev in (">", "]")
                if is_decl_shape and not saw_eq and not preceded_by_new(i):
                    cls = innermost_class()
                    pid = f"{cls}.{word}/{argc or 0}"
                    pending_method = _PendingMethod(
                        id=pid,
                        class_name=cls,
                        method_name=word,
                        arity=argc or 0,
                        sig_start=sig_anchor if sig_anchor is not None else s,
                    )
                    i = k  # jump to the `{`
                    continue
                if (
                    k < n
                    and toks[k][0] == TOK_PUNCT
                    and text[toks[k][1]] == ";"
                    and not saw_eq
                    and prev_ok
                ):
                    # Bodyless declaration (abstract/interface/native).
                    cls = innermost_class()
                    pid = f"{cls}.{word}/{argc or 0}"
                    start = sig_anchor if sig_anchor is not None else s
                    end = toks[k][2]
                    if pid not in seen_ids and end > start:
                        seen_ids.add(pid)
                        decls.append(
                            MethodDecl(
                                id=pid,
                                class_name=cls,
                                method_name=word,
                                arity=argc or 0,
                                file=unit.path,
                                span_start=start,
                                span_end=end,
                            )
                        )
                    i = k + 1
                    sig_anchor = None
                    saw_eq = False
                    continue
            i += 1
            continue

        # Inside a method body (or a block): a potential call site.
        caller = enclosing_method()
        if caller is None or word in NOT_A_CALLEE:
            i += 1
            continue
        close, argc = match_paren(i + 1)
        if close >= 0:
            k = close + 1
            follows_brace = (
                k < n
                and (
                    (toks[k][0] == TOK_PUNCT and text[toks[k][1]] == "{")
                    or (toks[k][0] == TOK_IDENT and lex(k) == "throws")
                )
            )
            if follows_brace and not preceded_by_new(i):
                # Method header of a local/anonymous class member: not a call.
                i += 1
                continue
        sites.append(
            RawCallSite(caller=caller.id, callee_name=word, arg_count=argc, site=s)
        )
        i += 1

    # Close any frames left open by truncated input.
    end_of_text = len(text)
    while frames:
        frame = frames.pop()
        if frame.kind == "method":
            finish_method(frame, end_of_text)

    unit.class_names = class_names
    unit.referenced_names = referenced
    return decls, sites
