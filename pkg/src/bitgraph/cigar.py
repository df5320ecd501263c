"""Run-length CIGAR edit scripts and affine scoring.

Operation alphabet: M (match), S (substitution, rendered as X in extended
form), I (insertion: consumes pattern only), D (deletion: consumes text
only).
"""

from __future__ import annotations

import re
from typing import Iterable, List, Sequence, Tuple

_OPS = "MSID"
_RUN_RE = re.compile(r"(\d+)([MSIDX=])")


class Cigar:
    __slots__ = ("runs",)

    def __init__(self, runs: Iterable[Tuple[int, str]]):
        merged: List[Tuple[int, str]] = []
        for count, op in runs:
            if op == "X":
                op = "S"
            elif op == "=":
                op = "M"
            if op not in _OPS:
                raise ValueError(f"unknown CIGAR op {op!r}")
            if count <= 0:
                raise ValueError("CIGAR run length must be positive")
            if merged and merged[-1][1] == op:
                merged[-1] = (merged[-1][0] + count, op)
            else:
                merged.append((count, op))
        self.runs = tuple(merged)

    @classmethod
    def from_ops(cls, ops: Iterable[str]) -> "Cigar":
        runs = []
        for op in ops:
            if runs and runs[-1][1] == op:
                runs[-1][0] += 1
            else:
                runs.append([1, op])
        return cls((c, o) for c, o in runs)

    @classmethod
    def from_string(cls, text: str) -> "Cigar":
        pos = 0
        runs = []
        for match in _RUN_RE.finditer(text):
            if match.start() != pos:
                raise ValueError(f"malformed CIGAR string {text!r}")
            runs.append((int(match.group(1)), match.group(2)))
            pos = match.end()
        if pos != len(text):
            raise ValueError(f"malformed CIGAR string {text!r}")
        return cls(runs)

    def __str__(self) -> str:
        return "".join(f"{c}{o}" for c, o in self.runs)

    def extended(self) -> str:
        """SAM-style extended rendering: M stays M, substitutions become X."""
        return "".join(f"{c}{'X' if o == 'S' else o}" for c, o in self.runs)

    def __eq__(self, other) -> bool:
        return isinstance(other, Cigar) and self.runs == other.runs

    def __hash__(self) -> int:
        return hash(self.runs)

    def __repr__(self) -> str:
        return f"Cigar({str(self)!r})"

    def ops(self) -> Iterable[str]:
        for count, op in self.runs:
            for _ in range(count):
                yield op

    def _total(self, kinds: str) -> int:
        return sum(c for c, o in self.runs if o in kinds)

    @property
    def pattern_consumed(self) -> int:
        return self._total("MSI")

    @property
    def text_consumed(self) -> int:
        return self._total("MSD")

    @property
    def edit_count(self) -> int:
        return self._total("SID")


def concat(parts: Sequence[Cigar]) -> Cigar:
    runs = []
    for part in parts:
        runs.extend(part.runs)
    return Cigar(runs)


def score_alignment(
    cigar: Cigar,
    match: int = 1,
    mismatch: int = -4,
    gap_open: int = -6,
    gap_extend: int = -1,
) -> int:
    """Affine-gap score; a gap run of length L costs gap_open + L * gap_extend."""
    score = 0
    for count, op in cigar.runs:
        if op == "M":
            score += count * match
        elif op == "S":
            score += count * mismatch
        else:
            score += gap_open + count * gap_extend
    return score


def reconstruct_pattern(text_codes: Sequence[int], pattern_codes: Sequence[int], cigar: Cigar) -> list:
    """Apply the CIGAR to the aligned text span; returns the rebuilt pattern.

    Raises ValueError when the script is inconsistent with the two sequences
    (an M over differing characters, an S over equal ones, or running off
    either end).
    """
    out = []
    ti = 0
    pi = 0
    for op in cigar.ops():
        if op == "M":
            if ti >= len(text_codes) or pi >= len(pattern_codes):
                raise ValueError("CIGAR overruns its sequences")
            if text_codes[ti] != pattern_codes[pi]:
                raise ValueError(f"M over differing characters at text {ti}, pattern {pi}")
            out.append(text_codes[ti])
            ti += 1
            pi += 1
        elif op == "S":
            if ti >= len(text_codes) or pi >= len(pattern_codes):
                raise ValueError("CIGAR overruns its sequences")
            if text_codes[ti] == pattern_codes[pi]:
                raise ValueError(f"S over equal characters at text {ti}, pattern {pi}")
            out.append(pattern_codes[pi])
            ti += 1
            pi += 1
        elif op == "I":
            if pi >= len(pattern_codes):
                raise ValueError("CIGAR overruns the pattern")
            out.append(pattern_codes[pi])
            pi += 1
        else:  # D
            if ti >= len(text_codes):
                raise ValueError("CIGAR overruns the text")
            ti += 1
    return out


def verify_alignment(
    text_codes: Sequence[int],
    pattern_codes: Sequence[int],
    cigar: Cigar,
    distance: int = None,
) -> None:
    """Check the reconstruction and edit-count invariants, raising on failure."""
    if cigar.pattern_consumed != len(pattern_codes):
        raise ValueError(
            f"CIGAR consumes {cigar.pattern_consumed} pattern chars, expected {len(pattern_codes)}"
        )
    rebuilt = reconstruct_pattern(text_codes, pattern_codes, cigar)
    if list(rebuilt) != list(pattern_codes):
        raise ValueError("CIGAR does not rebuild the pattern")
    if distance is not None and cigar.edit_count != distance:
        raise ValueError(f"CIGAR edit count {cigar.edit_count} != reported distance {distance}")
