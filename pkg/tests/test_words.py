import pytest

from betatau.errors import DomainError, ResourceLimitError
from betatau.expansions import EventuallyPeriodicSeq, lex_compare, seq
from betatau.words import (
    conjugate,
    count_ordered_factorizations,
    farey_form,
    farey_frequency,
    farey_level,
    farey_words_upto,
    is_farey,
    is_lyndon,
    lambda_enumerate,
    lambda_factorization,
    lambda_product,
    largest_rotation,
    reflect,
    smallest_rotation,
    substitute,
    thue_morse_prefix,
    word_minus,
    word_plus,
)


def test_rotations():
    assert largest_rotation("01") == "10"
    assert largest_rotation("001") == "100"
    assert largest_rotation("001011") == "110010"
    assert smallest_rotation("110010") == "001011"
    with pytest.raises(DomainError):
        largest_rotation("")


def test_is_lyndon():
    assert is_lyndon("001011")
    assert not is_lyndon("0101")
    assert is_lyndon("0010111")
    assert is_lyndon("0") and is_lyndon("1")
    assert not is_lyndon("10")


def test_farey_levels_match_known_listings():
    assert farey_level(1).words == ("0", "01", "1")
    assert farey_level(2).words == ("0", "001", "01", "011", "1")
    assert farey_level(3).words == (
        "0", "0001", "001", "00101", "01", "01011", "011", "0111", "1",
    )


def test_farey_level_structure():
    for n in range(9):
        lvl = farey_level(n)
        assert len(lvl.words) == 2**n + 1
        assert list(lvl.words) == sorted(lvl.words)
        assert len(set(lvl.words)) == len(lvl.words)
        for w in lvl.interior:
            assert is_lyndon(w)
    with pytest.raises(ResourceLimitError):
        farey_level(21)


def test_farey_frequency():
    from fractions import Fraction

    assert farey_frequency("01") == Fraction(1, 2)
    assert farey_frequency("001") == Fraction(1, 3)
    assert farey_frequency("01011") == Fraction(3, 5)
    with pytest.raises(DomainError):
        farey_frequency("001011")


def test_frequency_injective_on_level_8():
    words = farey_level(8).words
    freqs = {farey_frequency(w) for w in words}
    assert len(freqs) == len(words)


def test_is_farey_form_classification():
    ok, p, inner = farey_form("01011")
    assert "blocks" in ok and p == 1 and inner == "01"
    assert farey_form("0111") == ("0 1^p", 3, None)
    assert farey_form("00101")[2] == "01"
    assert is_farey("0") and is_farey("1") and is_farey("01")
    assert not is_farey("001011")
    assert not is_farey("0011")
    assert not is_farey("0101")


def test_is_farey_agrees_with_generated_levels():
    generated = set(farey_level(8).words) - {"0", "1"}
    max_len = max(len(w) for w in generated)
    for w in generated:
        assert is_farey(w), w
    # no false positives among all Lyndon words of small length
    for n in range(2, 11):
        lyndon_n = [
            format(k, f"0{n}b")
            for k in range(2**n)
            if is_lyndon(format(k, f"0{n}b"))
        ]
        for w in lyndon_n:
            if is_farey(w):
                assert w in generated or len(w) > max_len or w in farey_words_upto(n)


def test_farey_words_upto_matches_levels():
    upto = set(farey_words_upto(9))
    from_levels = {w for w in farey_level(8).words if 2 <= len(w) <= 9}
    assert from_levels <= upto
    assert all(is_farey(w) and 2 <= len(w) <= 9 for w in upto)
    # every length-m Farey word shows up by level m-1, so the sets agree
    assert upto == {w for w in farey_level(8).words if 2 <= len(w) <= 9}


def test_substitute_known_products():
    assert substitute("01", "001") == "001011"
    assert substitute("001", "011") == "000101001"
    assert substitute("001011", "011") == "001010110011001011"
    assert largest_rotation(substitute("01", "001")) == "110010"


def test_substitute_is_not_commutative():
    assert substitute("01", "001") != substitute("001", "01")


def test_substitute_domain_errors():
    with pytest.raises(DomainError):
        substitute("0101", "01")  # not Lyndon
    with pytest.raises(DomainError):
        substitute("0", "01")  # too short


def test_substitute_periodic_input():
    out = substitute("01", seq("", "001011"))
    assert out == seq("", "001011001101")
    # a pure zero tail maps onto a largest-rotation tail
    out = substitute("01", seq("1", "0"))
    assert out == EventuallyPeriodicSeq("1100", "10")


def test_lambda_product():
    assert lambda_product(["01", "01"]).product == "0011"
    assert lambda_product(["01", "001"]).product == "001011"
    assert lambda_product(["001"]).product == "001"
    with pytest.raises(DomainError):
        lambda_product(["0011"])  # not Farey
    with pytest.raises(DomainError):
        lambda_product([])


def test_lambda_enumerate():
    assert [w.product for w in lambda_enumerate(2)] == ["01"]
    assert {w.product for w in lambda_enumerate(3)} == {"01", "001", "011"}
    found = {w.product for w in lambda_enumerate(4)}
    assert found == {"01", "001", "011", "0001", "0011", "0111"}
    assert lambda_factorization("0011") == ("01", "01")
    with pytest.raises(ResourceLimitError):
        lambda_enumerate(100)


def test_lambda_unique_factorization_up_to_12():
    # brute force: distinct factor tuples give distinct products
    products = {}
    for w in lambda_enumerate(12):
        assert w.product not in products
        products[w.product] = w.factors
        assert lambda_product(w.factors).product == w.product
    # and the stored factorization is recoverable by decoding
    for product, factors in products.items():
        assert lambda_factorization(product) == factors


def test_conjugate():
    assert conjugate("01") == "01"
    assert conjugate("001") == "011"
    assert conjugate("0011") == "0011"


def test_word_minus_plus():
    assert word_minus("01") == "00"
    assert word_plus("10") == "11"
    assert word_minus("001011") == "001010"
    with pytest.raises(DomainError):
        word_minus("10")
    with pytest.raises(DomainError):
        word_plus("01")


def test_thue_morse_prefix():
    assert thue_morse_prefix(1) == "0"
    assert thue_morse_prefix(8) == "01101001"
    assert thue_morse_prefix(16) == "0110100110010110"


def test_thue_morse_recurrences():
    theta = thue_morse_prefix(2**13)
    for k in range(2**12):
        assert theta[2 * k] == theta[k]
        assert theta[2 * k + 1] != theta[k]


def test_ordered_factorizations():
    assert count_ordered_factorizations(1) == 1
    assert count_ordered_factorizations(4) == 2
    assert count_ordered_factorizations(8) == 4
    assert count_ordered_factorizations(12) == 8


def test_ordered_factorizations_quadratic_bound():
    for m in range(1, 10_001):
        assert count_ordered_factorizations(m) <= m * m


# ---------------------------------------------------------------------------
# semigroup and substitution properties


def _lyndon_words_upto(max_len):
    out = []
    for n in range(2, max_len + 1):
        for k in range(2**n):
            w = format(k, f"0{n}b")
            if is_lyndon(w):
                out.append(w)
    return out


def test_closure_products_are_lyndon():
    words = _lyndon_words_upto(6)
    for s in words:
        for r in words:
            assert is_lyndon(substitute(s, r))


def test_associativity_on_farey_triples():
    fareys = farey_words_upto(5)
    for r in fareys:
        for s in fareys:
            for t in fareys:
                if len(r) * len(s) * len(t) > 60:
                    continue
                assert substitute(substitute(r, s), t) == substitute(
                    r, substitute(s, t)
                )


def test_rotation_commutes_with_substitution():
    words = _lyndon_words_upto(6)
    for s in words:
        for r in words:
            assert largest_rotation(substitute(s, r)) == substitute(
                s, largest_rotation(r)
            )


def test_boundary_digit_flips():
    words = _lyndon_words_upto(5)
    for s in words:
        for d in ("01", "011", "0011", "010011"):
            assert substitute(s, word_minus(d)) == word_minus(substitute(s, d))
        for d in ("10", "110", "1100", "01010"):
            assert substitute(s, word_plus(d)) == word_plus(substitute(s, d))


def test_substitution_strictly_increasing_on_sequences():
    pairs = [
        (seq("", "01"), seq("", "10")),
        (seq("", "0010"), seq("", "0011")),
        (seq("110", "10"), seq("", "111")),
        (seq("", "10"), seq("1", "10")),
    ]
    for s in ("01", "001", "0011"):
        for c, d in pairs:
            assert lex_compare(c, d) == -1
            assert lex_compare(substitute(s, c), substitute(s, d)) == -1


def test_shift_order_preservation():
    # if d starts with 1 and every shift of c stays below d, the same holds
    # (blockwise) after substitution
    c = seq("", "0101101")
    d = seq("", "110")
    n_max = 14
    for s in ("01", "001", "011"):
        m = len(s)
        cc, dd = substitute(s, c), substitute(s, d)
        for n in range(n_max + 1):
            assert lex_compare(c.shift(n), d) == -1
            assert lex_compare(cc.shift(n * m), dd) == -1


def test_conjugation_is_an_automorphism():
    for w in lambda_enumerate(12):
        img = conjugate(w.product)
        assert lambda_factorization(img) is not None
        assert conjugate(img) == w.product
    fareys = farey_words_upto(6)
    for s in fareys:
        for r in fareys:
            assert conjugate(substitute(s, r)) == substitute(
                conjugate(s), conjugate(r)
            )


def test_farey_palindrome_and_reversal():
    for n in range(1, 9):
        for s in farey_level(n).interior:
            assert largest_rotation(s) == s[::-1]
            assert smallest_rotation(s) == s
            minus = word_minus(s)
            assert minus == minus[::-1]
            # the conjugate is again Farey, built by inner reflection
            tilde = conjugate(s)
            assert is_farey(tilde)
            assert tilde == "0" + reflect(s[1:-1]) + "1"
