"""Tokenizer backend selection: compiled extension if available, else pure Python.

Set ``WANDERCODE_PURE_PYTHON=1`` to force the fallback (used by the
benchmark and the backend-equivalence tests).
"""

from __future__ import annotations

import os

from wandercode.ingest._scanner_py import (  # noqa: F401  (re-exported)
    TOK_IDENT,
    TOK_NUMBER,
    TOK_PUNCT,
    TOK_STRING,
)
from wandercode.ingest._scanner_py import tokenize as tokenize_py

if os.environ.get("WANDERCODE_PURE_PYTHON") == "1":
    tokenize = tokenize_py
    BACKEND = "python"
else:
    try:
        from wandercode.ingest._scanner import tokenize as tokenize_c

        tokenize = tokenize_c
        BACKEND = "c"
    except ImportError:
        tokenize = tokenize_py
        BACKEND = "python"
