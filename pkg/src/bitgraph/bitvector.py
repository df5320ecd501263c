"""Multi-word bitvectors and per-symbol pattern bitmasks.

Vectors are m bits wide and stored as ceil(m/w) machine words of w bits each
(w defaults to 64).  Word 0 holds the least significant bits.  All operations
keep the vector canonical: bits above the declared bit length stay zero.

Bit-order convention used throughout the library: pattern position 0 occupies
the most significant bit, so a zero in the MSB of a status vector signals a
complete pattern match.
"""

from __future__ import annotations

from typing import Sequence, Tuple

from .encoding import EncodedSequence
from .errors import EmptyPattern

WORD_BITS = 64


class MultiWordBitvector:
    """Fixed-width bitvector spanning one or more machine words."""

    __slots__ = ("words", "bit_length", "word_bits")

    def __init__(self, words: Tuple[int, ...], bit_length: int, word_bits: int = WORD_BITS):
        self.words = words
        self.bit_length = bit_length
        self.word_bits = word_bits

    @classmethod
    def zeros(cls, bit_length: int, word_bits: int = WORD_BITS) -> "MultiWordBitvector":
        n_words = max(1, -(-bit_length // word_bits))
        return cls((0,) * n_words, bit_length, word_bits)

    @classmethod
    def ones(cls, bit_length: int, word_bits: int = WORD_BITS) -> "MultiWordBitvector":
        return cls.from_int((1 << bit_length) - 1, bit_length, word_bits)

    @classmethod
    def from_int(cls, value: int, bit_length: int, word_bits: int = WORD_BITS) -> "MultiWordBitvector":
        value &= (1 << bit_length) - 1
        n_words = max(1, -(-bit_length // word_bits))
        word_mask = (1 << word_bits) - 1
        words = tuple((value >> (i * word_bits)) & word_mask for i in range(n_words))
        return cls(words, bit_length, word_bits)

    def to_int(self) -> int:
        acc = 0
        for i, w in enumerate(self.words):
            acc |= w << (i * self.word_bits)
        return acc

    def bit(self, i: int) -> int:
        """Bit i, counted from the least significant end."""
        if not 0 <= i < self.bit_length:
            raise IndexError(i)
        return (self.words[i // self.word_bits] >> (i % self.word_bits)) & 1

    @property
    def msb(self) -> int:
        return self.bit(self.bit_length - 1)

    def shifted_left(self) -> "MultiWordBitvector":
        """Left shift by one with inter-word carry propagation.

        The bit shifted out of the top of word i-1 is saved and loaded as the
        least significant bit of word i; the bit leaving the vector's MSB is
        dropped so the result stays canonical.
        """
        wb = self.word_bits
        word_mask = (1 << wb) - 1
        out = []
        carry = 0
        for w in self.words:
            out.append(((w << 1) | carry) & word_mask)
            carry = (w >> (wb - 1)) & 1
        top_bits = self.bit_length - (len(self.words) - 1) * wb
        out[-1] &= (1 << top_bits) - 1
        return MultiWordBitvector(tuple(out), self.bit_length, wb)

    def _binary(self, other: "MultiWordBitvector", op) -> "MultiWordBitvector":
        if self.bit_length != other.bit_length or self.word_bits != other.word_bits:
            raise ValueError("bitvector shapes differ")
        words = tuple(op(a, b) for a, b in zip(self.words, other.words))
        return MultiWordBitvector(words, self.bit_length, self.word_bits)

    def __and__(self, other):
        return self._binary(other, lambda a, b: a & b)

    def __or__(self, other):
        return self._binary(other, lambda a, b: a | b)

    def __xor__(self, other):
        return self._binary(other, lambda a, b: a ^ b)

    def __invert__(self):
        return MultiWordBitvector.from_int(
            ~self.to_int(), self.bit_length, self.word_bits
        )

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, MultiWordBitvector)
            and self.bit_length == other.bit_length
            and self.words == other.words
        )

    def __hash__(self) -> int:
        return hash((self.words, self.bit_length))

    def __repr__(self) -> str:
        return f"MultiWordBitvector({format(self.to_int(), f'0{self.bit_length}b')})"


class PatternBitmasks:
    """One mask per alphabet symbol; bit for position i is 0 iff pattern[i] is that symbol."""

    __slots__ = ("masks", "pattern_length", "alphabet_size", "_ints")

    def __init__(self, masks: Tuple[MultiWordBitvector, ...], pattern_length: int):
        self.masks = masks
        self.pattern_length = pattern_length
        self.alphabet_size = len(masks)
        self._ints = tuple(m.to_int() for m in masks)

    def mask_ints(self) -> Tuple[int, ...]:
        """Masks as plain integers, indexed by symbol code."""
        return self._ints

    def zero_positions(self, code: int) -> list:
        """Pattern positions where the given symbol matches (mask bit is 0)."""
        m = self.pattern_length
        v = self._ints[code]
        return [i for i in range(m) if not (v >> (m - 1 - i)) & 1]


def mask_ints_from_codes(
    codes: Sequence[int],
    ambiguous: frozenset = frozenset(),
    alphabet_size: int = 4,
) -> list:
    """Integer bitmasks for a code sequence, MSB-first (position 0 at the MSB).

    Ambiguous pattern positions keep a 1 in every mask so they never match.
    """
    m = len(codes)
    full = (1 << m) - 1
    masks = [full] * alphabet_size
    for i, code in enumerate(codes):
        if i in ambiguous:
            continue
        masks[code] &= ~(1 << (m - 1 - i))
    return masks


def generate_pattern_bitmasks(pattern: EncodedSequence) -> PatternBitmasks:
    """Pattern bitmasks over the DNA alphabet."""
    if len(pattern) == 0:
        raise EmptyPattern("pattern must hold at least one character")
    ints = mask_ints_from_codes(pattern.codes(), pattern.ambiguous, 4)
    m = len(pattern)
    masks = tuple(MultiWordBitvector.from_int(v, m) for v in ints)
    return PatternBitmasks(masks, m)


def generate_generic_bitmasks(codes: Sequence[int], alphabet_size: int) -> PatternBitmasks:
    """Pattern bitmasks for an arbitrary alphabet of integer codes.

    The scan recurrences never depend on the alphabet, so swapping these masks
    in is all it takes to search non-DNA text.
    """
    if len(codes) == 0:
        raise EmptyPattern("pattern must hold at least one character")
    if any(not 0 <= c < alphabet_size for c in codes):
        raise ValueError("pattern code outside alphabet")
    ints = mask_ints_from_codes(codes, frozenset(), alphabet_size)
    m = len(codes)
    masks = tuple(MultiWordBitvector.from_int(v, m) for v in ints)
    return PatternBitmasks(masks, m)
