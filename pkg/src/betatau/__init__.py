"""Critical hole sizes for beta-transformations with a hole at zero.

Word combinatorics (Farey/Lyndon words and their substitution semigroup),
beta-expansion numerics, the induced parameter intervals, the critical value
function on (1, 2], and survivor-set counting used to validate it.
"""

from .errors import (
    BetaTauError,
    DomainError,
    NoRootError,
    PrecisionError,
    ResourceLimitError,
)
from .expansions import (
    DEFAULT_PREC,
    DigitResult,
    EventuallyPeriodicSeq,
    greedy,
    lex_compare,
    parse_seq,
    quasi_greedy,
    seq,
    seq_value,
    shift_dominated,
    solve_base,
    word_value,
)
from .words import (
    FareyLevel,
    LambdaWord,
    conjugate,
    count_ordered_factorizations,
    farey_frequency,
    farey_level,
    farey_words_upto,
    is_farey,
    is_lyndon,
    lambda_enumerate,
    lambda_factorization,
    lambda_product,
    largest_rotation,
    smallest_rotation,
    substitute,
    thue_morse_prefix,
    word_minus,
    word_plus,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
