"""Bitvector edit-distance scan with optional capture for traceback.

The scan walks the text backward, one character per iteration, maintaining
k+1 status vectors R[0..k].  A zero in the MSB of R[d] at iteration i means
the whole pattern matches the text starting at position i with at most d
edits.  For d >= 1 the update ANDs four intermediate vectors:

    deletion      D = oldR[d-1]
    substitution  S = oldR[d-1] << 1
    insertion     I = R[d-1] << 1
    match         M = (oldR[d] << 1) | PM[text[i]]

where oldR is the previous iteration's state.  AND preserves zeros, so R[d]
keeps every partial match reachable with at most d edits.
"""

from __future__ import annotations

import enum
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from .bitvector import PatternBitmasks, generate_pattern_bitmasks
from .encoding import EncodedSequence


class StoredVectors(enum.Enum):
    """Which vectors a capturing scan persists per (iteration, d) cell.

    ALL4 keeps the four intermediates verbatim.  MID drops the substitution
    vector (regenerated as deletion << 1).  MD additionally drops insertion,
    which the traceback then infers as the residual case.  STATUS keeps only
    the ANDed R vectors and regenerates all four intermediates on demand.
    """

    ALL4 = 4
    MID = 3
    MD = 2
    STATUS = 1

    @property
    def vectors_per_cell(self) -> int:
        return self.value


@dataclass(frozen=True)
class ScanConfig:
    k: int
    capture: bool = False
    stored: StoredVectors = StoredVectors.MD

    def __post_init__(self):
        if self.k < 0:
            raise ValueError("edit threshold must be >= 0")


@dataclass(frozen=True)
class ScanResult:
    start: Optional[int]
    distance: Optional[int]
    trace: Optional["TraceStore"] = None

    @property
    def found(self) -> bool:
        return self.distance is not None


class TraceStore:
    """Captured per-iteration vectors, indexed by (text iteration, d).

    Bit positions are counted from the least significant end; the caller's
    cursor starts at bit m-1 (pattern position 0).  Accessors return the bit
    value (0 means the corresponding edit case applies).
    """

    def __init__(self, stored: StoredVectors, m: int, k: int, cur_masks: Sequence[int]):
        self.stored = stored
        self.m = m
        self.k = k
        self.text_len = len(cur_masks)
        self._cur = cur_masks
        self._match: List[list] = []
        self._subs: List[list] = []
        self._ins: List[list] = []
        self._dele: List[list] = []
        self._status: List[tuple] = []
        self.final_r: Tuple[int, ...] = ()

    @property
    def can_test_insertion(self) -> bool:
        """MD capture cannot test the insertion vector directly; the walk
        must leave insertion as the residual case."""
        return self.stored is not StoredVectors.MD

    @property
    def captured_bits(self) -> int:
        return self.text_len * self.stored.vectors_per_cell * (self.k + 1) * self.m

    # -- capture hooks used by scan() ------------------------------------

    def _append_full(self, match_row, subs_row, ins_row, dele_row):
        self._match.append(match_row)
        self._ins.append(ins_row)
        self._dele.append(dele_row)
        if self.stored is StoredVectors.ALL4:
            self._subs.append(subs_row)

    def _append_md(self, match_row, dele_row):
        self._match.append(match_row)
        self._dele.append(dele_row)

    def _append_status(self, r_row):
        self._status.append(r_row)

    # -- bit accessors ----------------------------------------------------

    def _status_at(self, ti: int, d: int) -> int:
        # iteration past the last text character is the all-ones initial state
        if ti >= self.text_len:
            return (1 << self.m) - 1
        return self._status[self.text_len - 1 - ti][d]

    def match_bit(self, ti: int, d: int, p: int) -> int:
        if self.stored is StoredVectors.STATUS:
            old = self._status_at(ti + 1, d)
            shifted = (old >> (p - 1)) & 1 if p >= 1 else 0
            return shifted | ((self._cur[ti] >> p) & 1)
        return (self._match[self.text_len - 1 - ti][d] >> p) & 1

    def subs_bit(self, ti: int, d: int, p: int) -> int:
        if d < 1:
            return 1
        if p == 0:
            return 0
        if self.stored is StoredVectors.STATUS:
            return (self._status_at(ti + 1, d - 1) >> (p - 1)) & 1
        if self.stored is StoredVectors.ALL4:
            return (self._subs[self.text_len - 1 - ti][d] >> p) & 1
        # substitution vector is the deletion vector shifted left by one
        return (self._dele[self.text_len - 1 - ti][d] >> (p - 1)) & 1

    def dele_bit(self, ti: int, d: int, p: int) -> int:
        if d < 1:
            return 1
        if self.stored is StoredVectors.STATUS:
            return (self._status_at(ti + 1, d - 1) >> p) & 1
        return (self._dele[self.text_len - 1 - ti][d] >> p) & 1

    def ins_bit(self, ti: int, d: int, p: int) -> int:
        if d < 1:
            return 1
        if p == 0:
            return 0
        if self.stored is StoredVectors.STATUS:
            return (self._status_at(ti, d - 1) >> (p - 1)) & 1
        if self.stored is StoredVectors.MD:
            # residual inference: at a live cursor R[d] holds a zero, so if
            # match, substitution and deletion all read 1 the zero is I's
            if (
                self.match_bit(ti, d, p)
                and self.subs_bit(ti, d, p)
                and self.dele_bit(ti, d, p)
            ):
                return 0
            return 1
        return (self._ins[self.text_len - 1 - ti][d] >> p) & 1


def _text_masks(text: EncodedSequence, masks: PatternBitmasks) -> list:
    """Per-text-position pattern bitmask, with ambiguous text positions
    mapped to the all-ones (always mismatch) mask."""
    ints = masks.mask_ints()
    cur = [ints[c] for c in text.codes()]
    if text.ambiguous:
        full = (1 << masks.pattern_length) - 1
        for i in text.ambiguous:
            cur[i] = full
    return cur


def scan(text: EncodedSequence, masks: PatternBitmasks, config: ScanConfig) -> ScanResult:
    """Semi-global scan: report the minimum edit distance of the pattern
    against any text start position, and the smallest such start.

    Ties resolve to the smallest distance first, then the smallest start
    location, so results are deterministic.
    """
    m = masks.pattern_length
    k = config.k
    if config.capture and k >= m:
        raise ValueError("capture requires k < pattern length")
    cur_masks = _text_masks(text, masks)
    n = len(cur_masks)

    full = (1 << m) - 1
    msb = 1 << (m - 1)

    trace = TraceStore(config.stored, m, k, cur_masks) if config.capture else None

    best_d = -1
    best_i = -1

    if k == 0:
        # exact matching needs only the R[0] shift-or recurrence
        r0 = full
        capture = trace is not None
        for i in range(n - 1, -1, -1):
            r0 = ((r0 << 1) | cur_masks[i]) & full
            if capture:
                if config.stored is StoredVectors.STATUS:
                    trace._append_status((r0,))
                elif config.stored is StoredVectors.MD:
                    trace._append_md([r0], [0])
                else:
                    trace._append_full([r0], [0], [0], [0])
            if not r0 & msb:
                best_d = 0
                best_i = i
        if trace is not None:
            trace.final_r = (r0,)
        if best_d < 0:
            return ScanResult(None, None, trace)
        return ScanResult(best_i, best_d, trace)

    R = [full] * (k + 1)
    stored = config.stored
    for i in range(n - 1, -1, -1):
        cur = cur_masks[i]
        old = R
        R = [0] * (k + 1)
        r0 = ((old[0] << 1) | cur) & full
        R[0] = r0
        hit = 0 if not r0 & msb else -1
        prev = r0
        if trace is None:
            for d in range(1, k + 1):
                od1 = old[d - 1]
                rd = od1 & (od1 << 1) & (prev << 1) & ((old[d] << 1) | cur) & full
                R[d] = rd
                prev = rd
                if hit < 0 and not rd & msb:
                    hit = d
        else:
            match_row = [r0]
            subs_row = [0]
            ins_row = [0]
            dele_row = [0]
            for d in range(1, k + 1):
                od1 = old[d - 1]
                s_vec = (od1 << 1) & full
                i_vec = (prev << 1) & full
                m_vec = ((old[d] << 1) | cur) & full
                rd = od1 & s_vec & i_vec & m_vec
                R[d] = rd
                prev = rd
                if hit < 0 and not rd & msb:
                    hit = d
                match_row.append(m_vec)
                subs_row.append(s_vec)
                ins_row.append(i_vec)
                dele_row.append(od1)
            if stored is StoredVectors.STATUS:
                trace._append_status(tuple(R))
            elif stored is StoredVectors.MD:
                trace._append_md(match_row, dele_row)
            else:
                trace._append_full(match_row, subs_row, ins_row, dele_row)
        if hit >= 0 and (best_d < 0 or hit <= best_d):
            best_d = hit
            best_i = i

    if trace is not None:
        trace.final_r = tuple(R)
    if best_d < 0:
        return ScanResult(None, None, trace)
    return ScanResult(best_i, best_d, trace)


def _merge(best, candidate):
    if candidate[0] is None:
        return best
    if best[0] is None:
        return candidate
    return min(best, candidate)


def parallel_scan(
    text: EncodedSequence,
    pattern: EncodedSequence,
    k: int,
    workers: int = 1,
) -> ScanResult:
    """Scan overlapping sub-texts independently and merge the results.

    Sub-texts extend m+k characters past their chunk so no match straddling a
    boundary is lost; the merged result is identical to a single whole-text
    scan for any worker count.
    """
    masks = generate_pattern_bitmasks(pattern)
    n = len(text)
    m = len(pattern)
    overlap = m + k
    if workers <= 1 or n <= overlap * 2:
        r = scan(text, masks, ScanConfig(k=k))
        return ScanResult(r.start, r.distance)

    chunk = -(-n // workers)
    jobs = []
    for w in range(workers):
        s = w * chunk
        if s >= n:
            break
        e = min(n, s + chunk + overlap)
        jobs.append((s, text.slice(s, e)))

    def run(job):
        s, sub = job
        r = scan(sub, masks, ScanConfig(k=k))
        if r.distance is None:
            return (None, None)
        return (r.distance, s + r.start)

    with ThreadPoolExecutor(max_workers=workers) as pool:
        results = list(pool.map(run, jobs))

    best = (None, None)
    for cand in results:
        best = _merge(best, cand)
    if best[0] is None:
        return ScanResult(None, None)
    return ScanResult(best[1], best[0])


@dataclass(frozen=True)
class FilterDecision:
    accepted: bool
    distance: Optional[int]


def filter_pair(
    reference: EncodedSequence, read: EncodedSequence, threshold: int
) -> FilterDecision:
    """Pre-alignment filter: accept iff the scan distance is within the
    threshold.

    Accepting is free of false rejects: any pair within the threshold under
    the semi-global measure is accepted.  The scan does not charge deletions
    of leading text characters, so a pair can be accepted whose global edit
    distance exceeds the threshold by its leading/trailing deletions.
    """
    masks = generate_pattern_bitmasks(read)
    r = scan(reference, masks, ScanConfig(k=threshold))
    if r.distance is None:
        return FilterDecision(False, None)
    return FilterDecision(True, r.distance)
