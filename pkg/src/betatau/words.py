"""Exact combinatorics on finite binary words.

Words are plain strings over the characters '0' and '1'; Python's string
comparison gives the lexicographic order digit by digit, which is exactly the
order used throughout.  The module provides Farey-word generation and
recognition, Lyndon predicates, cyclic-rotation extremes, digit reflection and
conjugation, the substitution product on Lyndon words, its generated
semigroup, Thue-Morse prefixes, and ordered-factorization counts.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import DomainError, ResourceLimitError

MAX_FAREY_LEVEL = 20
MAX_LAMBDA_LEN = 24
MAX_FACTORIZATION_M = 10**6

_FORM_ZEROS_ONE = "0^p 1"
_FORM_ZERO_ONES = "0 1^p"


def validate_word(w: str, *, allow_empty: bool = False) -> str:
    """Check that ``w`` is a string over {0,1}; the empty word is only the
    concatenation identity and is rejected by default."""
    if not isinstance(w, str):
        raise DomainError(f"expected a 0/1 string, got {type(w).__name__}")
    if not w:
        if allow_empty:
            return w
        raise DomainError("empty word has no rotation")
    if w.strip("01"):
        raise DomainError(f"word {w!r} contains characters outside {{0,1}}")
    return w


def reflect(w: str) -> str:
    """Flip every digit of ``w`` (0 <-> 1)."""
    validate_word(w, allow_empty=True)
    return w.translate(str.maketrans("01", "10"))


def word_minus(w: str) -> str:
    """Flip a final 1 to 0."""
    validate_word(w)
    if w[-1] != "1":
        raise DomainError(f"word {w!r} does not end in 1")
    return w[:-1] + "0"


def word_plus(w: str) -> str:
    """Flip a final 0 to 1."""
    validate_word(w)
    if w[-1] != "0":
        raise DomainError(f"word {w!r} does not end in 0")
    return w[:-1] + "1"


def rotations(w: str) -> list[str]:
    validate_word(w)
    return [w[i:] + w[:i] for i in range(len(w))]


def largest_rotation(w: str) -> str:
    """Lexicographically largest cyclic rotation of ``w``."""
    return max(rotations(w))


def smallest_rotation(w: str) -> str:
    """Lexicographically smallest cyclic rotation of ``w``."""
    return min(rotations(w))


def is_lyndon(w: str) -> bool:
    """True iff every proper suffix of ``w`` exceeds the prefix of equal
    length; the one-letter words count as Lyndon."""
    validate_word(w)
    m = len(w)
    return all(w[i:] > w[: m - i] for i in range(1, m))


@dataclass(frozen=True)
class FareyLevel:
    """One level of the Farey-word construction: 2^n + 1 ordered words."""

    level: int
    words: tuple[str, ...]

    @property
    def interior(self) -> tuple[str, ...]:
        return self.words[1:-1]


def farey_level(n: int, *, max_level: int = MAX_FAREY_LEVEL) -> FareyLevel:
    """Level ``n`` of the neighbour-concatenation construction, starting from
    ('0', '1') and inserting w_j w_{j+1} between each neighbouring pair."""
    if n < 0:
        raise DomainError("level must be nonnegative")
    if n > max_level:
        raise ResourceLimitError(f"farey level {n} exceeds cap {max_level}")
    words = ["0", "1"]
    for _ in range(n):
        nxt = []
        for a, b in zip(words, words[1:]):
            nxt.append(a)
            nxt.append(a + b)
        nxt.append(words[-1])
        words = nxt
    return FareyLevel(n, tuple(words))


def _split_blocks(w: str, lead: str) -> list[int] | None:
    # Tokenize w as (lead tail^k)+ blocks; return the list of k's, or None
    # if w is not of that shape.
    tail = "1" if lead == "0" else "0"
    if not w.startswith(lead):
        return None
    counts = []
    i = 0
    n = len(w)
    while i < n:
        if w[i] != lead:
            return None
        i += 1
        k = 0
        while i < n and w[i] == tail:
            k += 1
            i += 1
        counts.append(k)
    return counts


@lru_cache(maxsize=None)
def farey_form(w: str) -> tuple[str, int, str | None] | None:
    """Classify ``w`` against the four canonical shapes of non-degenerate
    Farey words, returning (form, p, inner) or None.

    The shapes are 0 1^p, 0^p 1, and the two block shapes
    0 1^p 0 1^(p+t_1) ... 0 1^(p+t_N) 0 1^(p+1) and
    0^(p+1) 1 0^(p+t_1) 1 ... 0^(p+t_N) 1 0^p 1, whose inner word
    0 t_1 ... t_N 1 must again be Farey.
    """
    validate_word(w)
    if len(w) < 2:
        return None
    p = len(w) - 1
    if w == "0" + "1" * p:
        return (_FORM_ZERO_ONES, p, None)
    if w == "0" * p + "1":
        return (_FORM_ZEROS_ONE, p, None)
    # 0 1^p 0 1^(p+t_1) ... 0 1^(p+t_N) 0 1^(p+1)
    counts = _split_blocks(w, "0")
    if counts is not None and len(counts) >= 2:
        p = counts[0]
        if p >= 1 and counts[-1] == p + 1:
            ts = [k - p for k in counts[1:-1]]
            if all(t in (0, 1) for t in ts):
                inner = "0" + "".join(str(t) for t in ts) + "1"
                if is_farey(inner):
                    return (_FORM_ZERO_ONES + " blocks", p, inner)
    # 0^(p+1) 1 0^(p+t_1) 1 ... 0^(p+t_N) 1 0^p 1; reflecting the reversal
    # turns 0^k 1 blocks into 0 1^k blocks, read from the other end
    counts = _split_blocks(reflect(w[::-1]), "0")
    if counts is not None and len(counts) >= 2:
        rev = counts[::-1]  # zero-run lengths of w's blocks, original order
        p = rev[-1]
        if p >= 1 and rev[0] == p + 1:
            ts = [k - p for k in rev[1:-1]]
            if all(t in (0, 1) for t in ts):
                inner = "0" + "".join(str(t) for t in ts) + "1"
                if is_farey(inner):
                    return (_FORM_ZEROS_ONE + " blocks", p, inner)
    return None


@lru_cache(maxsize=None)
def is_farey(w: str) -> bool:
    """True iff ``w`` is a Farey word ('0' and '1' count as degenerate)."""
    validate_word(w)
    if w in ("0", "1"):
        return True
    return farey_form(w) is not None


def is_farey_nondegenerate(w: str) -> bool:
    return len(w) >= 2 and is_farey(w)


def farey_frequency(s: str) -> Fraction:
    """Frequency of the digit 1 in a Farey word, as an exact fraction."""
    if not is_farey(s):
        raise DomainError(f"{s!r} is not a Farey word")
    return Fraction(s.count("1"), len(s))


@lru_cache(maxsize=8)
def farey_words_upto(max_len: int) -> tuple[str, ...]:
    """All non-degenerate Farey words of length <= max_len, ordered by
    (length, word).  Walks the neighbour-pair tree, pruning long products."""
    if max_len < 2:
        return ()
    out = []
    stack = [("0", "1")]
    while stack:
        a, b = stack.pop()
        child = a + b
        if len(child) <= max_len:
            out.append(child)
            stack.append((a, child))
            stack.append((child, b))
    out.sort(key=lambda w: (len(w), w))
    return tuple(out)


def _substitution_blocks(s: str) -> dict[str, str]:
    a = largest_rotation(s)
    return {"00": a, "01": word_plus(a), "10": word_minus(s), "11": s}


def substitute(s: str, r):
    """Substitution product: each digit of ``r`` expands to one of the four
    blocks s^-, s, L(s), L(s)^+ chosen by the digit pair ending at it.

    ``r`` may be a word (returns a word) or any object with ``preperiod`` and
    ``period`` string attributes (returns the same kind, with the image of the
    periodic tail again periodic).
    """
    validate_word(s)
    if len(s) < 2 or not is_lyndon(s):
        raise DomainError(f"substitution base {s!r} must be Lyndon of length >= 2")
    blocks = _substitution_blocks(s)
    first = {"0": blocks["10"], "1": blocks["01"]}

    def emit(digits: str, prev: str | None) -> str:
        out = []
        for d in digits:
            out.append(first[d] if prev is None else blocks[prev + d])
            prev = d
        return "".join(out)

    if isinstance(r, str):
        validate_word(r)
        return emit(r, None)

    pre, per = r.preperiod, r.period
    if not per:
        raise DomainError("periodic part must be nonempty")
    # Block j depends on digits j-1 and j, so the image is periodic only from
    # one digit past the preperiod; shift the split point by one.
    head = pre + per[0]
    body = per[1:] + per[0]
    out_pre = emit(head, None)
    out_per = emit(body, head[-1])
    return type(r)(out_pre, out_per)


@dataclass(frozen=True)
class LambdaWord:
    """A word in the substitution semigroup, with its Farey factorization."""

    product: str
    factors: tuple[str, ...]

    def __post_init__(self):
        if not self.factors:
            raise DomainError("factor list must be nonempty")

    def __str__(self) -> str:
        return self.product

    def __len__(self) -> int:
        return len(self.product)


def lambda_product(factors) -> LambdaWord:
    """Left-fold substitution product of non-degenerate Farey words."""
    factors = tuple(factors)
    if not factors:
        raise DomainError("factor list must be nonempty")
    for f in factors:
        if not is_farey_nondegenerate(f):
            raise DomainError(f"factor {f!r} is not a non-degenerate Farey word")
    prod = factors[0]
    for f in factors[1:]:
        prod = substitute(prod, f)
    return LambdaWord(prod, factors)


def as_lambda_word(w) -> LambdaWord:
    """Coerce a string or LambdaWord to a LambdaWord, factorizing if needed."""
    if isinstance(w, LambdaWord):
        return w
    factors = lambda_factorization(w)
    if factors is None:
        raise DomainError(f"{w!r} is not a product of Farey words")
    return LambdaWord(w, factors)


@lru_cache(maxsize=None)
def lambda_factorization(w: str) -> tuple[str, ...] | None:
    """Factor ``w`` as a substitution product of non-degenerate Farey words,
    or return None.  Bounded search: the first factor s must satisfy
    s^- = prefix of w, so only divisor lengths of |w| are tried."""
    validate_word(w)
    if is_farey_nondegenerate(w):
        return (w,)
    n = len(w)
    for d in range(2, n):
        if n % d or n // d < 2:
            continue
        s = word_plus(w[:d]) if w[d - 1] == "0" else None
        if s is None or not is_farey_nondegenerate(s):
            continue
        r = _decode_blocks(s, w)
        if r is None:
            continue
        rest = lambda_factorization(r)
        if rest is not None:
            return (s,) + rest
    return None


def _decode_blocks(s: str, w: str) -> str | None:
    # Invert the substitution by s: recover r with substitute(s, r) == w.
    blocks = _substitution_blocks(s)
    inverse = {v: k for k, v in blocks.items()}
    m = len(s)
    if len(w) % m:
        return None
    digits = []
    prev = None
    for i in range(0, len(w), m):
        chunk = w[i : i + m]
        if prev is None:
            if chunk == blocks["10"]:
                digits.append("0")
            elif chunk == blocks["01"]:
                digits.append("1")
            else:
                return None
        else:
            pair = inverse.get(chunk)
            if pair is None or pair[0] != prev:
                return None
            digits.append(pair[1])
        prev = digits[-1]
    return "".join(digits)


def lambda_enumerate(max_len: int, *, cap: int = MAX_LAMBDA_LEN) -> list[LambdaWord]:
    """All semigroup words of product length <= max_len, deduplicated by
    product, sorted by (length, product)."""
    if max_len > cap:
        raise ResourceLimitError(f"max_len {max_len} exceeds cap {cap}")
    seen: dict[str, LambdaWord] = {}
    fareys = farey_words_upto(max_len)

    def extend(word: LambdaWord):
        if word.product in seen:
            return
        seen[word.product] = word
        for r in fareys:
            if len(word.product) * len(r) <= max_len:
                extend(LambdaWord(substitute(word.product, r), word.factors + (r,)))

    for s in fareys:
        extend(LambdaWord(s, (s,)))
    return sorted(seen.values(), key=lambda w: (len(w.product), w.product))


def conjugate(w) -> str:
    """Digit reflection of the largest rotation; an involution on the
    substitution semigroup that distributes over the product."""
    word = w.product if isinstance(w, LambdaWord) else w
    validate_word(word)
    if not is_lyndon(word):
        raise DomainError(f"{word!r} is not Lyndon")
    return reflect(largest_rotation(word))


def thue_morse_prefix(n: int) -> str:
    """First ``n`` digits of the Thue-Morse sequence (parity of the bit count,
    starting 0 1 1 0 1 0 0 1 ...)."""
    if n < 1:
        raise DomainError("prefix length must be positive")
    return "".join(str(k.bit_count() & 1) for k in range(n))


@lru_cache(maxsize=None)
def count_ordered_factorizations(m: int) -> int:
    """Number of ordered factorizations of ``m`` into factors >= 2."""
    if m < 1:
        raise DomainError("m must be positive")
    if m > MAX_FACTORIZATION_M:
        raise ResourceLimitError(f"m {m} exceeds cap {MAX_FACTORIZATION_M}")
    if m == 1:
        return 1
    total = 0
    d = 2
    while d * d <= m:
        if m % d == 0:
            total += count_ordered_factorizations(m // d)
            if d != m // d:
                total += count_ordered_factorizations(d)
        d += 1
    return total + 1  # the factorization (m) itself
