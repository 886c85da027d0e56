"""The problem-file format: one module J/I per file.

    # comment
    n: <int>
    label: <free text, optional>
    J: unit | zero | x<i>*x<j>[, ...]
    I: unit | zero | x<i>*x<j>[, ...]

Keys may appear in any order; n, J and I are required.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Union

from .errors import ParseError
from .ideals import IdealPair, RingContext, parse_ideal


@dataclass(frozen=True)
class ProblemFile:
    n: int
    upper_text: str
    lower_text: str
    label: Optional[str] = None

    def ring(self) -> RingContext:
        return RingContext(self.n)

    def pair(self) -> IdealPair:
        ctx = self.ring()
        upper = parse_ideal(self.upper_text, ctx)
        lower = parse_ideal(self.lower_text, ctx)
        return IdealPair(lower, upper)


_KEYS = ("n", "label", "J", "I")


def parse_problem_text(text: str) -> ProblemFile:
    seen: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        hash_pos = raw.find("#")
        line = raw[:hash_pos] if hash_pos >= 0 else raw
        if not line.strip():
            continue
        key, sep, value = line.partition(":")
        key = key.strip()
        if not sep or key not in _KEYS:
            raise ParseError(f"expected one of {', '.join(_KEYS)} followed by ':'", lineno)
        if key in seen:
            raise ParseError(f"duplicate key {key!r}", lineno)
        seen[key] = value.strip()
    for key in ("n", "J", "I"):
        if key not in seen:
            raise ParseError(f"missing required key {key!r}")
    try:
        n = int(seen["n"])
    except ValueError:
        raise ParseError(f"n must be an integer, got {seen['n']!r}") from None
    return ProblemFile(n=n, upper_text=seen["J"], lower_text=seen["I"],
                       label=seen.get("label") or None)


def parse_problem_file(path: Union[str, Path]) -> ProblemFile:
    return parse_problem_text(Path(path).read_text(encoding="utf-8"))
