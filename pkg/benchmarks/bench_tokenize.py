"""Benchmark: compiled scanner vs pure-Python scanner.

Generates a synthetic Java corpus and times full tokenization with each
backend. Run from the repo root:

    python3 benchmarks/bench_tokenize.py [--files N] [--repeat R]
"""

from __future__ import annotations

import argparse
import random
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "tests"))

from corpus import generate_corpus  # noqa: E402

from wandercode.ingest._scanner_py import tokenize as tokenize_py  # noqa: E402

try:
    from wandercode.ingest._scanner import tokenize as tokenize_c
except ImportError:
    tokenize_c = None


def make_corpus(n_files: int) -> list[str]:
    rng = random.Random(1234)
    texts: list[str] = []
    while len(texts) < n_files:
        texts.extend(generate_corpus(rng, max_methods=50).values())
    return texts[:n_files]


def bench(fn, texts: list[str], repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        for text in texts:
            fn(text)
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> int:
    parser = argparse.ArgumentParser()
    parser.add_argument("--files", type=int, default=500)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    texts = make_corpus(args.files)
    total_chars = sum(len(t) for t in texts)
    print(f"{args.files} files, {total_chars / 1e6:.2f} M chars, best of {args.repeat}")

    t_py = bench(tokenize_py, texts, args.repeat)
    print(f"pure python : {t_py:.3f}s  ({total_chars / t_py / 1e6:.1f} Mchar/s)")

    if tokenize_c is None:
        print("compiled    : not built (python3 setup.py build_ext --inplace)")
        return 1
    t_c = bench(tokenize_c, texts, args.repeat)
    print(f"compiled    : {t_c:.3f}s  ({total_chars / t_c / 1e6:.1f} Mchar/s)")
    print(f"speedup     : {t_py / t_c:.2f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
