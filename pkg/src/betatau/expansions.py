"""Digit sequences and beta-expansion numerics.

Eventually periodic 0/1 sequences are stored as (preperiod, period) string
pairs; equality and ordering go through a normalized form (primitive period,
minimal preperiod) while the construction form is kept for display.  Real
numbers are mpmath floats; every numeric operation takes an explicit
``prec`` (mantissa bits, default 256) and evaluates under a guarded working
precision, so precision travels with the call rather than with hidden global
state.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import lcm

from mpmath import mp, mpf

from .errors import DomainError, NoRootError, PrecisionError
from .words import validate_word

DEFAULT_PREC = 256


def _normalize(pre: str, per: str) -> tuple[str, str]:
    # primitive period
    k = (per + per).index(per, 1)
    per = per[:k]
    # absorb preperiod digits that merely rotate the period
    while pre and pre[-1] == per[-1]:
        pre = pre[:-1]
        per = per[-1] + per[:-1]
    return pre, per


@dataclass(frozen=True, eq=False)
class EventuallyPeriodicSeq:
    """A sequence  preperiod . period period period ...  over {0,1}.

    A sequence ending in zeros is encoded with period "0".  Two instances are
    equal iff their normalized forms coincide; the fields keep whatever form
    the sequence was built in.
    """

    preperiod: str
    period: str
    _norm: tuple[str, str] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        validate_word(self.preperiod, allow_empty=True)
        validate_word(self.period)
        object.__setattr__(self, "_norm", _normalize(self.preperiod, self.period))

    def normalized(self) -> tuple[str, str]:
        return self._norm

    def __eq__(self, other) -> bool:
        if not isinstance(other, EventuallyPeriodicSeq):
            return NotImplemented
        return self._norm == other._norm

    def __hash__(self) -> int:
        return hash(self._norm)

    def digit(self, i: int) -> str:
        """0-based digit access."""
        if i < len(self.preperiod):
            return self.preperiod[i]
        return self.period[(i - len(self.preperiod)) % len(self.period)]

    def prefix(self, n: int) -> str:
        pre, per = self.preperiod, self.period
        if n <= len(pre):
            return pre[:n]
        reps = (n - len(pre)) // len(per) + 1
        return (pre + per * reps)[:n]

    def shift(self, n: int = 1) -> "EventuallyPeriodicSeq":
        pre, per = self.preperiod, self.period
        if n <= len(pre):
            return EventuallyPeriodicSeq(pre[n:], per)
        k = (n - len(pre)) % len(per)
        return EventuallyPeriodicSeq("", per[k:] + per[:k])

    def starts_with_one(self) -> bool:
        return self.digit(0) == "1"

    def __str__(self) -> str:
        if self._norm[1] == "0":
            return self.preperiod or "0"
        return f"{self.preperiod}({self.period})"


def seq(pre: str, per: str = "0") -> EventuallyPeriodicSeq:
    return EventuallyPeriodicSeq(pre, per)


def parse_seq(text: str) -> EventuallyPeriodicSeq:
    """Parse the literal syntax  PRE(PER) | (PER) | PRE  (bare PRE means a
    zero tail)."""
    text = text.strip()
    if "(" in text:
        if not text.endswith(")") or text.count("(") != 1:
            raise DomainError(f"malformed sequence literal {text!r}")
        pre, per = text[:-1].split("(")
        if not per:
            raise DomainError(f"malformed sequence literal {text!r}")
        return EventuallyPeriodicSeq(pre, per)
    if ")" in text:
        raise DomainError(f"malformed sequence literal {text!r}")
    return EventuallyPeriodicSeq(text, "0")


def lex_compare(c: EventuallyPeriodicSeq, d: EventuallyPeriodicSeq) -> int:
    """-1, 0 or +1 for the lexicographic order of the two sequences."""
    if c == d:
        return 0
    n = len(c.preperiod) + len(d.preperiod) + lcm(len(c.period), len(d.period)) + 1
    a, b = c.prefix(n), d.prefix(n)
    return -1 if a < b else 1


def shift_dominated(c: EventuallyPeriodicSeq) -> bool:
    """True iff no shift of the sequence exceeds the sequence itself."""
    bound = len(c.preperiod) + len(c.period)
    return all(lex_compare(c.shift(n), c) <= 0 for n in range(1, bound + 1))


def _workprec(prec: int) -> int:
    return prec + 32


def near_tie(a, b, prec: int = DEFAULT_PREC) -> bool:
    """Flag comparisons that are closer than the 2^(-prec/2) guard."""
    with mp.workprec(_workprec(prec)):
        return abs(mpf(a) - mpf(b)) < mpf(2) ** (-(prec // 2))


def _check_beta(beta, prec: int):
    # conversion must run under a widened context: mpf() rounds to the
    # precision in force at call time
    with mp.workprec(_workprec(prec)):
        beta = mpf(beta)
    if not 1 < beta <= 2:
        raise DomainError(f"base {mp.nstr(beta, 8)} outside (1, 2]")
    return beta


def seq_value(c: EventuallyPeriodicSeq, beta, prec: int = DEFAULT_PREC):
    """Value sum_i c_i beta^(-i) of an eventually periodic digit sequence."""
    with mp.workprec(_workprec(prec)):
        beta = mpf(beta)
        if beta <= 1:
            raise DomainError("base must exceed 1")
        x = 1 / beta
        pre, per = c.preperiod, c.period
        p = mpf(0)
        for digit in reversed(pre):
            p = (p + int(digit)) * x
        q = mpf(0)
        for digit in reversed(per):
            q = (q + int(digit)) * x
        if q:
            p += x ** len(pre) * q / (1 - x ** len(per))
        return +p


def word_value(w: str, beta, prec: int = DEFAULT_PREC):
    """Value of a finite word followed by zeros."""
    return seq_value(EventuallyPeriodicSeq(w, "0"), beta, prec)


def solve_base(c: EventuallyPeriodicSeq, target=1, prec: int = DEFAULT_PREC):
    """The unique base in (1, 2] where the sequence value hits ``target``.

    The value is strictly decreasing in the base, so plain bisection is
    enough; the result satisfies |value - target| < 2^(-prec+8).
    """
    if not c.starts_with_one():
        raise DomainError("sequence must start with digit 1")
    wp = _workprec(prec)
    with mp.workprec(wp):
        target = mpf(target)
        if target <= 0:
            raise DomainError("target must be positive")
        lo = 1 + mpf(2) ** -20
        hi = mpf(2)
        f_hi = seq_value(c, hi, wp) - target
        if f_hi == 0:
            return +hi
        if f_hi > 0:
            raise NoRootError("no root in range: value at 2 still above target")
        if seq_value(c, lo, wp) - target < 0:
            raise NoRootError("no root in range: value below target near 1")
        tol = mpf(2) ** (-(prec + 40))
        for _ in range(prec + 80):
            mid = (lo + hi) / 2
            if seq_value(c, mid, wp) - target > 0:
                lo = mid
            else:
                hi = mid
            if hi - lo < tol:
                break
        root = (lo + hi) / 2
        residual = abs(seq_value(c, root, wp) - target)
        if residual >= mpf(2) ** (-(prec - 8)):
            raise PrecisionError("bisection residual not certifiable at this precision")
        return +root


@dataclass(frozen=True)
class DigitResult:
    """Extracted expansion digits plus the index of the first digit whose
    branch decision fell inside the near-tie guard (None when clean)."""

    digits: str
    unreliable_from: int | None

    def reliable(self) -> str:
        if self.unreliable_from is None:
            return self.digits
        return self.digits[: self.unreliable_from]


def quasi_greedy(beta, n: int, prec: int = DEFAULT_PREC) -> DigitResult:
    """First ``n`` digits of the quasi-greedy expansion of 1 in base ``beta``
    (the largest expansion of 1 not ending in zeros; ties resolve to 0)."""
    if n < 1:
        raise DomainError("digit count must be positive")
    beta = _check_beta(beta, prec)
    # Double working precision: the orbit error grows like beta^k, so digits
    # up to ~1.5*prec stay certified under the 2^(-prec/2) tie guard.
    with mp.workprec(2 * prec + 32):
        tol = mpf(2) ** (-(prec // 2))
        x = mpf(1)
        digits = []
        flag = None
        for i in range(n):
            y = beta * x
            if abs(y - 1) < tol:
                if flag is None:
                    flag = i
                d = 0
            else:
                d = 1 if y > 1 else 0
            digits.append(str(d))
            x = y - d
        return DigitResult("".join(digits), flag)


def greedy(t, beta, n: int, prec: int = DEFAULT_PREC) -> DigitResult:
    """First ``n`` digits of the greedy expansion of ``t`` in base ``beta``
    (ties resolve to 1)."""
    if n < 1:
        raise DomainError("digit count must be positive")
    beta = _check_beta(beta, prec)
    with mp.workprec(2 * prec + 32):
        t = mpf(t)
        if not 0 <= t < 1:
            raise DomainError("t must lie in [0, 1)")
        tol = mpf(2) ** (-(prec // 2))
        x = mpf(t)
        digits = []
        flag = None
        for i in range(n):
            y = beta * x
            if abs(y - 1) < tol:
                if flag is None:
                    flag = i
                d = 1
            else:
                d = 1 if y >= 1 else 0
            digits.append(str(d))
            x = y - d
        return DigitResult("".join(digits), flag)


class DeltaDigits:
    """Lazily extended quasi-greedy digits of 1 in a fixed base.

    ``get(i)`` returns the i-th digit (0-based) or None once the request runs
    past the reliability horizon.  The horizon is the smaller of the hard
    orbit budget (1.5 * prec digits, past which the doubled working precision
    no longer certifies the orbit) and the endpoint-separation budget
    prec / (2 log2 beta): a base within 2^(-prec/2) of another shares that
    many leading digits, so later digits cannot place it on one side.
    A near-tie branch (orbit returning to 1) also ends the reliable digits.
    """

    def __init__(self, beta, prec: int = DEFAULT_PREC):
        import math

        self.prec = prec
        with mp.workprec(2 * prec + 32):
            self.beta = _check_beta(beta, prec)
            self._x = mpf(1)
            self._tol = mpf(2) ** (-(prec // 2))
        separation = int(prec / 2 / math.log2(float(self.beta))) + 1
        self.limit = min(prec + prec // 2, max(separation, 8))
        self._digits: list[str] = []
        self.flag: int | None = None

    def _extend(self, upto: int):
        with mp.workprec(2 * self.prec + 32):
            while len(self._digits) < upto and self.flag is None and len(self._digits) < self.limit:
                y = self.beta * self._x
                if abs(y - 1) < self._tol:
                    self.flag = len(self._digits)
                    return
                d = 1 if y > 1 else 0
                self._digits.append(str(d))
                self._x = y - d

    def get(self, i: int) -> str | None:
        if i >= len(self._digits):
            self._extend(i + 1)
        if i < len(self._digits):
            return self._digits[i]
        return None

    def known_prefix(self) -> str:
        return "".join(self._digits)


def compare_digits(view, s: EventuallyPeriodicSeq, max_digits: int | None = None) -> int | None:
    """Compare a digit view (anything with ``get``) against a symbolic
    sequence: -1/+1 at the first difference, None when the digits run out
    before a difference appears."""
    limit = max_digits if max_digits is not None else getattr(view, "limit", 1 << 20)
    for i in range(limit):
        a = view.get(i)
        if a is None:
            return None
        b = s.digit(i)
        if a != b:
            return -1 if a < b else 1
    return None
