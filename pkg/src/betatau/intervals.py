"""Parameter intervals on (1, 2] and classification of a base against them.

Every Lyndon word W cuts out an interval of bases [beta_left, beta_right]
whose quasi-greedy expansions of 1 run from L(W)^inf to L(W)^+ W^inf, with the
plateau part [beta_left, beta_star] ending at L(W)^+ W^- L(W)^inf.  Membership
of a base is decided by comparing its quasi-greedy digits against those
symbolic boundary sequences, so classification never needs a root solve;
solves are only used to produce numeric endpoint tables.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from mpmath import mp, mpf

from .errors import DomainError
from .expansions import (
    DEFAULT_PREC,
    DeltaDigits,
    EventuallyPeriodicSeq,
    compare_digits,
    quasi_greedy,
    seq_value,
    solve_base,
)
from .words import (
    LambdaWord,
    as_lambda_word,
    farey_words_upto,
    largest_rotation,
    lambda_enumerate,
    smallest_rotation,
    substitute,
    word_minus,
    word_plus,
)

DEFAULT_MAX_DEPTH = 8
DEFAULT_MAX_FACTOR_LEN = 16


def boundary_sequences(word: str) -> tuple[EventuallyPeriodicSeq, EventuallyPeriodicSeq, EventuallyPeriodicSeq]:
    """The three defining expansions (left, star, right) of the intervals
    generated by a Lyndon word."""
    big = largest_rotation(word)
    big_plus = word_plus(big)
    return (
        EventuallyPeriodicSeq("", big),
        EventuallyPeriodicSeq(big_plus + word_minus(word), big),
        EventuallyPeriodicSeq(big_plus, word),
    )


@dataclass(frozen=True)
class IntervalRecord:
    """Solved endpoints of the intervals generated by one semigroup word."""

    word: LambdaWord
    beta_left: object
    beta_star: object
    beta_right: object
    residuals: tuple

    def to_dict(self) -> dict:
        return {
            "word": self.word.product,
            "factors": list(self.word.factors),
            "beta_left": mp.nstr(self.beta_left, 15),
            "beta_star": mp.nstr(self.beta_star, 15),
            "beta_right": mp.nstr(self.beta_right, 15),
            "residuals": [mp.nstr(r, 3) for r in self.residuals],
        }


_interval_cache: dict[tuple[str, int], IntervalRecord] = {}


def lyndon_interval(word, prec: int = DEFAULT_PREC) -> IntervalRecord:
    """Solve the three endpoint equations for a semigroup word."""
    lam = as_lambda_word(word)
    key = (lam.product, prec)
    hit = _interval_cache.get(key)
    if hit is not None:
        return hit
    left_seq, star_seq, right_seq = boundary_sequences(lam.product)
    betas = []
    residuals = []
    for s in (left_seq, star_seq, right_seq):
        root = solve_base(s, prec=prec)
        betas.append(root)
        residuals.append(abs(seq_value(s, root, prec) - 1))
    record = IntervalRecord(lam, betas[0], betas[1], betas[2], tuple(residuals))
    _interval_cache[key] = record
    return record


def interval_table(max_len: int, prec: int = DEFAULT_PREC) -> list[IntervalRecord]:
    """Records for every semigroup word up to the length bound, by left
    endpoint."""
    records = [lyndon_interval(w, prec) for w in lambda_enumerate(max_len)]
    records.sort(key=lambda r: r.beta_left)
    return records


class Regime(enum.Enum):
    BIFURCATION_E = "BifurcationE"
    BASIC_INTERVAL = "BasicInterval"
    RELATIVE_BIFURCATION = "RelativeBifurcation"
    INFINITE_CHAIN = "InfiniteChain"
    UNRESOLVED = "Unresolved"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class ClassificationResult:
    """Where a base falls in the partition of (1, 2].

    ``chain`` lists the Farey factors descended; ``terminal_word`` is their
    product where one exists.  For relative-bifurcation verdicts
    ``delta_hat_digits`` holds the decoded quasi-greedy digits of the
    renormalized base.  ``boundary`` tags which endpoint comparison was
    undecidable when the kind is Unresolved.
    """

    kind: Regime
    chain: tuple[str, ...]
    terminal_word: LambdaWord | None
    depth_reached: int
    precision_flag: bool = False
    delta_hat_digits: str = ""
    boundary: str | None = None
    boundary_word: str | None = None

    def to_dict(self) -> dict:
        out = {
            "kind": self.kind.value,
            "chain": list(self.chain),
            "terminal_word": self.terminal_word.product if self.terminal_word else None,
            "depth_reached": self.depth_reached,
            "precision_flag": self.precision_flag,
        }
        if self.boundary:
            out["boundary"] = self.boundary
            out["boundary_word"] = self.boundary_word
        return out


def _unresolved(view, chain, depth, side: str, word: str) -> ClassificationResult:
    # A near-tie in the digit orbit means the expansion of 1 is periodic to
    # within precision, which happens exactly at left interval endpoints; the
    # period read off so far names the word whose endpoint this is.
    flagged = view.flag is not None
    if flagged and view.flag > 0:
        # the tie digit itself is the 0 closing the period
        prefix = view.known_prefix()[: view.flag] + "0"
        if "1" in prefix:
            return ClassificationResult(
                Regime.UNRESOLVED, tuple(chain), None, depth,
                precision_flag=True,
                boundary="left", boundary_word=smallest_rotation(prefix),
            )
    return ClassificationResult(
        Regime.UNRESOLVED, tuple(chain), None, depth,
        precision_flag=flagged, boundary=side, boundary_word=word,
    )


def _decode_digits(view, word: str, limit: int) -> str:
    """Greedy block decode of a digit view by the four substitution blocks of
    ``word``; stops at the first digit gap or block mismatch."""
    big = largest_rotation(word)
    blocks = {
        "00": big,
        "01": word_plus(big),
        "10": word_minus(word),
        "11": word,
    }
    m = len(word)
    digits = []
    prev = None
    for j in range(limit):
        chunk_digits = [view.get(j * m + i) for i in range(m)]
        if any(d is None for d in chunk_digits):
            break
        chunk = "".join(chunk_digits)
        if prev is None:
            if chunk == blocks["01"]:
                digits.append("1")
            elif chunk == blocks["10"]:
                digits.append("0")
            else:
                break
        else:
            for pair, block in blocks.items():
                if pair[0] == prev and block == chunk:
                    digits.append(pair[1])
                    break
            else:
                break
        prev = digits[-1]
    return "".join(digits)


def classify(
    beta,
    max_depth: int = DEFAULT_MAX_DEPTH,
    max_factor_len: int = DEFAULT_MAX_FACTOR_LEN,
    prec: int = DEFAULT_PREC,
    digit_view=None,
) -> ClassificationResult:
    """Locate ``beta`` in the partition of (1, 2] into the bifurcation set,
    the plateau intervals, their relative bifurcation sets, and infinite
    nested chains, to the configured depth and factor-length caps."""
    if max_depth < 1:
        raise DomainError("max_depth must be at least 1")
    view = digit_view if digit_view is not None else DeltaDigits(beta, prec)
    candidates = farey_words_upto(max_factor_len)
    chain: list[str] = []
    product = ""  # empty = identity at the top level

    for depth in range(1, max_depth + 1):
        found = None
        for r in candidates:
            word = substitute(product, r) if product else r
            left_seq, star_seq, right_seq = boundary_sequences(word)
            cmp_right = compare_digits(view, right_seq)
            if cmp_right is None:
                return _unresolved(view, chain + [r], depth, "right", word)
            if cmp_right > 0:
                continue
            cmp_left = compare_digits(view, left_seq)
            if cmp_left is None:
                return _unresolved(view, chain + [r], depth, "left", word)
            if cmp_left < 0:
                continue
            found = (r, word, star_seq)
            break
        if found is None:
            if not chain:
                return ClassificationResult(Regime.BIFURCATION_E, (), None, depth)
            decoded = _decode_digits(view, product, view.limit // len(product) + 1)
            return ClassificationResult(
                Regime.RELATIVE_BIFURCATION, tuple(chain),
                LambdaWord(product, tuple(chain)), depth,
                delta_hat_digits=decoded,
            )
        r, word, star_seq = found
        chain.append(r)
        product = word
        cmp_star = compare_digits(view, star_seq)
        if cmp_star is None:
            return _unresolved(view, chain, depth, "star", word)
        if cmp_star < 0:
            return ClassificationResult(
                Regime.BASIC_INTERVAL, tuple(chain),
                LambdaWord(product, tuple(chain)), depth,
            )
        # strictly between beta_star and beta_right: descend unless the next
        # level's words would outrun the certified digit budget
        if 2 * len(product) > view.limit:
            return ClassificationResult(
                Regime.INFINITE_CHAIN, tuple(chain),
                LambdaWord(product, tuple(chain)), depth,
                precision_flag=True,
            )
    return ClassificationResult(
        Regime.INFINITE_CHAIN, tuple(chain),
        LambdaWord(product, tuple(chain)), max_depth,
    )


@dataclass(frozen=True)
class RenormResult:
    """Image of a base under the renormalization attached to a word."""

    value: object
    sequence: EventuallyPeriodicSeq | None
    digits: str | None
    lower: object
    upper: object


def renormalize(
    word,
    beta_hat=None,
    n: int = 64,
    prec: int = DEFAULT_PREC,
    delta_hat: EventuallyPeriodicSeq | None = None,
) -> RenormResult:
    """Map a base through  delta -> substitute -> delta^(-1).

    With a symbolic quasi-greedy expansion (``delta_hat``, or beta_hat equal
    to 2 whose expansion is all ones) the image is solved exactly; otherwise
    ``n`` numeric digits give a certified bracket.
    """
    lam = as_lambda_word(word)
    if delta_hat is None and beta_hat is not None and mpf(beta_hat) == 2:
        delta_hat = EventuallyPeriodicSeq("", "1")
    if delta_hat is not None:
        image = substitute(lam.product, delta_hat)
        root = solve_base(image, prec=prec)
        return RenormResult(root, image, None, root, root)
    if beta_hat is None:
        raise DomainError("need a base or a symbolic expansion to renormalize")
    d = quasi_greedy(beta_hat, n, prec)
    digits = d.reliable()
    if len(digits) < 2:
        raise DomainError("not enough reliable digits to renormalize")
    image_prefix = substitute(lam.product, digits)
    lower = solve_base(EventuallyPeriodicSeq(image_prefix, "0"), prec=prec)
    upper = solve_base(EventuallyPeriodicSeq(image_prefix, "1"), prec=prec)
    with mp.workprec(prec + 32):
        mid = (lower + upper) / 2
    return RenormResult(mid, None, image_prefix, lower, upper)
