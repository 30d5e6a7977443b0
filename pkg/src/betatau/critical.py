"""The critical hole-size function tau on (1, 2].

tau(beta) is the largest hole radius at 0 below which the survivor set of the
beta-transformation keeps positive Hausdorff dimension.  On a plateau
interval generated by a word W it equals the value of W^- L(W)^inf; on the
bifurcation set it is 1 - 1/beta; on a relative bifurcation set it is the
value of the substituted hole expansion of the renormalized base; down an
infinite chain it is the limit of the partial words, reported here as a
certified bracket.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from mpmath import mp, mpf

from .errors import DomainError
from .expansions import (
    DEFAULT_PREC,
    DeltaDigits,
    EventuallyPeriodicSeq,
    seq_value,
    word_value,
)
from .intervals import (
    DEFAULT_MAX_DEPTH,
    DEFAULT_MAX_FACTOR_LEN,
    ClassificationResult,
    Regime,
    classify,
    lyndon_interval,
)
from .words import (
    as_lambda_word,
    is_farey_nondegenerate,
    largest_rotation,
    substitute,
    thue_morse_prefix,
    word_minus,
)

_WITNESS_DIGITS = 48


def _stream_witness(digits: str) -> str:
    if len(digits) <= _WITNESS_DIGITS:
        return digits + "..."
    return digits[:_WITNESS_DIGITS] + "..."


@dataclass(frozen=True)
class TauResult:
    """Point value, certified bracket, and provenance for tau at one base."""

    beta: object
    tau: object
    tau_lo: object
    tau_hi: object
    regime: ClassificationResult
    witness: str
    error_bound: object

    def to_dict(self) -> dict:
        return {
            "beta": mp.nstr(self.beta, 15),
            "tau": mp.nstr(self.tau, 15),
            "tau_lo": mp.nstr(self.tau_lo, 15),
            "tau_hi": mp.nstr(self.tau_hi, 15),
            "regime": self.regime.kind.value,
            "chain": list(self.regime.chain),
            "witness": self.witness,
            "error_bound": mp.nstr(self.error_bound, 5),
        }


def tau(
    beta,
    max_depth: int = DEFAULT_MAX_DEPTH,
    max_factor_len: int = DEFAULT_MAX_FACTOR_LEN,
    prec: int = DEFAULT_PREC,
) -> TauResult:
    """Critical hole size at ``beta``, dispatched over its classification."""
    view = DeltaDigits(beta, prec)
    beta = view.beta
    cls = classify(beta, max_depth, max_factor_len, prec, digit_view=view)
    wp = prec + 32
    kind = cls.kind

    if kind is Regime.BIFURCATION_E:
        with mp.workprec(wp):
            value = 1 - 1 / beta
        witness = _stream_witness("0" + view.known_prefix()[1:])
        eps = mpf(2) ** (-(prec - 8))
        return TauResult(beta, value, value, value, cls, witness, eps)

    if kind is Regime.BASIC_INTERVAL:
        word = cls.terminal_word.product
        w_seq = EventuallyPeriodicSeq(word_minus(word), largest_rotation(word))
        value = seq_value(w_seq, beta, prec)
        eps = mpf(2) ** (-(prec - 8))
        return TauResult(beta, value, value, value, cls, str(w_seq), eps)

    if kind is Regime.RELATIVE_BIFURCATION:
        word = cls.terminal_word.product
        digits = cls.delta_hat_digits
        if not digits or digits[0] != "1":
            digits = "1" + digits  # decoded expansions of 1 start with 1
        hole_digits = "0" + digits[1:]
        lo = seq_value(substitute(word, EventuallyPeriodicSeq(hole_digits, "0")), beta, prec)
        hi = seq_value(substitute(word, EventuallyPeriodicSeq(hole_digits, "1")), beta, prec)
        with mp.workprec(wp):
            value = (lo + hi) / 2
            eps = (hi - lo) / 2
        witness = _stream_witness(substitute(word, hole_digits))
        return TauResult(beta, value, lo, hi, cls, witness, eps)

    if kind is Regime.INFINITE_CHAIN:
        word = cls.terminal_word.product
        hi = word_value(word, beta, prec)
        lo = seq_value(
            EventuallyPeriodicSeq(word_minus(word), largest_rotation(word)), beta, prec
        )
        with mp.workprec(wp):
            eps = hi - lo
        return TauResult(beta, hi, lo, hi, cls, _stream_witness(word), eps)

    # Unresolved: bracket the two one-sided candidates at the ambiguous
    # endpoint; at a right endpoint that bracket is the genuine jump
    word = cls.boundary_word
    if cls.boundary == "right":
        lo = word_value(word, beta, prec)
        hi = seq_value(EventuallyPeriodicSeq("", word), beta, prec)
    else:
        inside = seq_value(
            EventuallyPeriodicSeq(word_minus(word), largest_rotation(word)), beta, prec
        )
        lo = hi = inside
    with mp.workprec(wp):
        value = (lo + hi) / 2
        eps = (hi - lo) / 2 + mpf(2) ** (-(prec // 2))
    return TauResult(beta, value, lo, hi, cls, _stream_witness(word), eps)


def tau_basic(word, beta, prec: int = DEFAULT_PREC):
    """tau on the plateau interval of ``word``; errors outside it."""
    lam = as_lambda_word(word)
    record = lyndon_interval(lam, prec)
    with mp.workprec(prec + 32):
        beta = mpf(beta)
        slack = mpf(2) ** (-(prec // 2))
        if beta < record.beta_left - slack or beta > record.beta_star + slack:
            raise DomainError(
                f"base {mp.nstr(beta, 8)} outside the plateau interval of {lam.product}"
            )
    w_seq = EventuallyPeriodicSeq(word_minus(lam.product), largest_rotation(lam.product))
    return seq_value(w_seq, beta, prec)


@dataclass(frozen=True)
class JumpRecord:
    """tau at a right interval endpoint together with its right-hand limit."""

    word: str
    beta_right: object
    tau_at: object
    right_limit: object

    def to_dict(self) -> dict:
        return {
            "word": self.word,
            "beta_right": mp.nstr(self.beta_right, 15),
            "tau_at": mp.nstr(self.tau_at, 15),
            "right_limit": mp.nstr(self.right_limit, 15),
        }


def tau_jump(word, prec: int = DEFAULT_PREC) -> JumpRecord:
    """Size of the upward jump of tau at the right endpoint of a word's
    interval: tau there is the value of W 0^inf, the right limit is W^inf."""
    lam = as_lambda_word(word)
    record = lyndon_interval(lam, prec)
    beta_r = record.beta_right
    at = word_value(lam.product, beta_r, prec)
    limit = seq_value(EventuallyPeriodicSeq("", lam.product), beta_r, prec)
    return JumpRecord(lam.product, beta_r, at, limit)


def interleaved_thue_morse_digits(inner: str, n: int) -> str:
    """First ``n`` digits of  t1 c t2 t3 c t4 ...  where (t_i) is the
    Thue-Morse sequence and c is the inner block."""
    block = len(inner) + 2
    pairs = n // block + 2
    theta = thue_morse_prefix(2 * pairs + 2)
    out = []
    for k in range(1, pairs + 1):
        out.append(theta[2 * k - 1] + inner + theta[2 * k])
    return "".join(out)[:n]


@dataclass(frozen=True)
class ThueMorseBase:
    word: str
    beta_inf: object
    tau: object
    error_bound: object

    def to_dict(self) -> dict:
        return {
            "word": self.word,
            "beta_inf": mp.nstr(self.beta_inf, 15),
            "tau": mp.nstr(self.tau, 15),
            "error_bound": mp.nstr(self.error_bound, 5),
        }


def thue_morse_base(word: str, prec: int = DEFAULT_PREC) -> ThueMorseBase:
    """The base inside a Farey word's interval whose expansion of 1 is the
    inner-interleaved Thue-Morse sequence, plus its closed-form tau."""
    if not is_farey_nondegenerate(word):
        raise DomainError(f"{word!r} is not a non-degenerate Farey word")
    inner = word[1:-1]
    m = len(word)
    record = lyndon_interval(word, prec)
    wp = prec + 32
    with mp.workprec(wp):
        lo = mpf(record.beta_left)
        hi = mpf(record.beta_right)
        # enough digits that the truncation tail drops below the target
        n_digits = int((prec + 16) / math.log2(float(lo)) + 2 * m) + 8
        digits = interleaved_thue_morse_digits(inner, n_digits)
        # the value is decreasing in the base; bisect on the truncated sum
        # plus half its geometric tail
        for _ in range(prec + 60):
            mid = (lo + hi) / 2
            v_lo = word_value(digits, mid, wp)
            v_hi = v_lo + mid ** (-n_digits) / (mid - 1)
            if (v_lo + v_hi) / 2 > 1:
                lo = mid
            else:
                hi = mid
            if hi - lo < mpf(2) ** (-(prec + 8)):
                break
        root = (lo + hi) / 2
        tail = root ** (-n_digits) / (root - 1)

        numerator = mpf(0)
        for j in range(2, m + 1):
            numerator += 2 * int(word[j - 1]) * root ** (m - j)
        numerator += root ** (m - 1) - root**m
        value = numerator / (root**m - 1)
        err = tail * 4 + mpf(2) ** (-(prec - 16))
        return ThueMorseBase(word, +root, +value, +err)


TABLE_WORDS = ("0001", "001", "00101", "01", "01011", "011", "0111")


def table_thue_morse(prec: int = DEFAULT_PREC) -> list[ThueMorseBase]:
    """The seven bases and critical values attached to the level-3 Farey
    words."""
    return [thue_morse_base(w, prec) for w in TABLE_WORDS]


@dataclass(frozen=True)
class CurveRow:
    beta: object
    result: TauResult
    near_jump: bool = False

    def to_dict(self) -> dict:
        out = self.result.to_dict()
        out["near_jump"] = self.near_jump
        return out


def tau_curve(
    beta_lo,
    beta_hi,
    step,
    max_depth: int = DEFAULT_MAX_DEPTH,
    max_factor_len: int = DEFAULT_MAX_FACTOR_LEN,
    prec: int = DEFAULT_PREC,
) -> list[CurveRow]:
    """Grid evaluation of tau, with rows near a detected upward jump marked
    (tau never moves up along the grid except across a discontinuity)."""
    with mp.workprec(prec + 32):
        lo = mpf(beta_lo)
        hi = mpf(beta_hi)
        h = mpf(step)
        if not (1 < lo < hi <= 2) or h <= 0:
            raise DomainError("need 1 < from < to <= 2 and positive step")
        grid = []
        k = 0
        while True:
            b = lo + k * h
            if b > hi + h / 2:
                break
            grid.append(min(b, mpf(2)))
            k += 1
    results = [
        tau(b, max_depth=max_depth, max_factor_len=max_factor_len, prec=prec)
        for b in grid
    ]
    # upward moves are discontinuities; mark the ones visible at grid scale
    jumps = set()
    for i in range(len(results) - 1):
        rise = results[i + 1].tau - results[i].tau
        if rise > h + results[i].error_bound + results[i + 1].error_bound:
            jumps.add(i)
    rows = []
    for i, res in enumerate(results):
        near = any(abs(i - j) <= 10 for j in jumps)
        rows.append(CurveRow(grid[i], res, near))
    return rows
