"""2-bit DNA sequence encoding.

Bases are packed four to a byte (A=00, C=01, G=10, T=11).  Positions holding
any other character are flagged as ambiguous so downstream bitmask generation
can treat them as always-mismatch; the packed code at those positions is a
placeholder.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import InvalidCharacter

CODE_A, CODE_C, CODE_G, CODE_T = 0, 1, 2, 3

_CHAR_TO_CODE = {}
for _i, _c in enumerate("ACGT"):
    _CHAR_TO_CODE[_c] = _i
    _CHAR_TO_CODE[_c.lower()] = _i

_CODE_TO_CHAR = "ACGT"


class EncodedSequence:
    """Immutable 2-bit packed DNA sequence with per-position ambiguity flags."""

    __slots__ = ("_packed", "length", "ambiguous")

    def __init__(self, packed: bytes, length: int, ambiguous: frozenset = frozenset()):
        self._packed = packed
        self.length = length
        self.ambiguous = ambiguous

    @classmethod
    def from_codes(cls, codes: Sequence[int], ambiguous: Iterable[int] = ()) -> "EncodedSequence":
        packed = bytearray((len(codes) + 3) // 4)
        for i, code in enumerate(codes):
            packed[i >> 2] |= (code & 3) << ((i & 3) << 1)
        return cls(bytes(packed), len(codes), frozenset(ambiguous))

    def __len__(self) -> int:
        return self.length

    def __getitem__(self, i: int) -> int:
        if not 0 <= i < self.length:
            raise IndexError(i)
        return (self._packed[i >> 2] >> ((i & 3) << 1)) & 3

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, EncodedSequence)
            and self.length == other.length
            and self._packed == other._packed
            and self.ambiguous == other.ambiguous
        )

    def __hash__(self) -> int:
        return hash((self._packed, self.length, self.ambiguous))

    def __repr__(self) -> str:
        shown = self.decode() if self.length <= 32 else self.decode()[:29] + "..."
        return f"EncodedSequence({shown!r}, length={self.length})"

    def codes(self) -> bytes:
        """Unpacked per-base codes; the fast accessor for scan loops."""
        out = bytearray(self.length)
        packed = self._packed
        for i in range(self.length):
            out[i] = (packed[i >> 2] >> ((i & 3) << 1)) & 3
        return bytes(out)

    def packed_bytes(self) -> bytes:
        return self._packed

    def is_ambiguous(self, i: int) -> bool:
        return i in self.ambiguous

    def decode(self) -> str:
        chars = [_CODE_TO_CHAR[c] for c in self.codes()]
        for i in self.ambiguous:
            chars[i] = "N"
        return "".join(chars)

    def slice(self, start: int, stop: int) -> "EncodedSequence":
        start = max(0, start)
        stop = min(self.length, stop)
        if stop <= start:
            return EncodedSequence.from_codes(b"")
        codes = self.codes()[start:stop]
        amb = [i - start for i in self.ambiguous if start <= i < stop]
        return EncodedSequence.from_codes(codes, amb)


def encode(raw: str, strict: bool = False) -> EncodedSequence:
    """Encode a character string.

    In strict mode any non-ACGT character raises InvalidCharacter.  In lenient
    mode (the default) such positions are packed with a placeholder code and
    flagged ambiguous, which makes them mismatch every pattern character.
    """
    codes = bytearray(len(raw))
    ambiguous = []
    for i, ch in enumerate(raw):
        code = _CHAR_TO_CODE.get(ch)
        if code is None:
            if strict:
                raise InvalidCharacter(f"non-ACGT character {ch!r} at position {i}")
            ambiguous.append(i)
            code = 0
        codes[i] = code
    return EncodedSequence.from_codes(codes, ambiguous)


def encode_codes(codes: Sequence[int]) -> EncodedSequence:
    """Wrap pre-computed 2-bit codes (no ambiguity) as an EncodedSequence."""
    return EncodedSequence.from_codes(codes)
