import random

import pytest

from quiddity import eta, frieze
from quiddity.errors import ContractionError, InvalidSequenceError


def frieze_oracle(seq) -> bool:
    """Validity via frieze generation: clean run and ones row exactly at n-1."""
    try:
        window = frieze.generate_frieze(seq)
    except Exception:
        return False
    return frieze.has_ones_row(window) == len(seq) - 1


@pytest.mark.parametrize(
    "seq,expected",
    [
        ((1, 1, 1), True),
        ((2, 1, 3, 1, 2), True),
        ((2, 2, 2), False),
        ((2, 1, 2, 1, 2, 1), False),
        ((2, 1, 2, 1), True),
        ((4, 2, 1, 3, 2, 2, 1), True),
    ],
)
def test_is_eta(seq, expected):
    assert eta.is_eta(seq) is expected
    assert eta.is_eta_by_contraction(seq) is expected


def test_is_eta_rejects_malformed():
    with pytest.raises(InvalidSequenceError):
        eta.is_eta((1, 1))
    with pytest.raises(InvalidSequenceError):
        eta.is_eta((1, 0, 1))
    with pytest.raises(InvalidSequenceError):
        eta.is_eta((1, -2, 1, 4))


def test_rotate():
    assert eta.rotate((2, 1, 2, 1), 1) == (1, 2, 1, 2)
    assert eta.rotate((1, 3, 2, 1, 5, 1, 2, 3), 1) == (3, 2, 1, 5, 1, 2, 3, 1)
    for seq in [(1, 1, 1), (2, 1, 3, 1, 2)]:
        assert eta.rotate(seq, len(seq)) == seq


def test_reverse():
    assert eta.reverse((1, 1, 1)) == (1, 1, 1)
    assert eta.reverse((4, 2, 1, 3, 2, 2, 1)) == (1, 2, 2, 3, 1, 2, 4)
    for seq in [(1, 2, 2, 1, 3), (3, 1, 2, 3, 1, 2)]:
        assert eta.reverse(eta.reverse(seq)) == seq


def test_expand():
    assert eta.expand((1, 1, 1), 0) == (2, 1, 2, 1)
    assert eta.expand((3, 1, 2, 2, 1), 0) == (4, 1, 2, 2, 2, 1)


def test_expand_wraparound():
    # gap between the last and first entries: new 1 lands at the end
    assert eta.expand((1, 1, 1), 2) == (2, 1, 2, 1)
    assert eta.expand((2, 1, 2, 1), 3) == (3, 1, 2, 2, 1)


def test_contract():
    assert eta.contract((2, 1, 2, 1), 1) == (1, 1, 1)
    assert eta.contract((4, 1, 2, 2, 2, 1), 1) == (3, 1, 2, 2, 1)


def test_contract_errors():
    with pytest.raises(ContractionError):
        eta.contract((1, 1, 1), 0)
    with pytest.raises(ContractionError):
        eta.contract((2, 1, 2, 1), 0)  # entry is 2, not 1
    with pytest.raises(ContractionError):
        eta.contract((2, 1, 1, 2), 1)  # neighbour below 2


def test_expand_contract_inverse():
    for seq in [(1, 1, 1), (2, 1, 2, 1), (1, 2, 2, 1, 3), (4, 1, 2, 2, 2, 1)]:
        for i in range(len(seq)):
            assert eta.contract(eta.expand(seq, i), i + 1) == seq


def test_expand_preserves_validity_everywhere():
    for seq in [(1, 1, 1), (2, 1, 2, 1), (1, 2, 2, 1, 3), (3, 1, 2, 3, 1, 2)]:
        for i in range(len(seq)):
            assert eta.is_eta(eta.expand(seq, i))


def test_rotate_reverse_preserve_validity(quiddities_by_n):
    for n in range(3, 9):
        for seq in quiddities_by_n[n]:
            assert eta.is_eta(eta.rotate(seq, 1))
            assert eta.is_eta(eta.reverse(seq))


def test_valid_sequences_sum_and_ears(quiddities_by_n):
    for n in range(3, 11):
        for seq in quiddities_by_n[n]:
            assert sum(seq) == 3 * n - 6
            if n > 3:
                assert seq.count(1) >= 2


def test_contraction_completeness(quiddities_by_n):
    # every valid sequence reduces to (1,1,1) by ear removals
    for n in range(3, 11):
        for seq in quiddities_by_n[n]:
            assert eta.is_eta_by_contraction(seq)


class TestThreeOracleEquivalence:
    """word == -I, ear contraction, and the frieze ones-row must agree."""

    def check(self, seq):
        word = eta.is_eta(seq)
        assert eta.is_eta_by_contraction(seq) is word
        assert frieze_oracle(seq) is word

    def test_exhaustive_small(self):
        from itertools import product

        for n, bound in [(3, 5), (4, 5), (5, 4), (6, 3)]:
            for seq in product(range(1, bound + 1), repeat=n):
                self.check(seq)

    def test_random_medium(self):
        rng = random.Random(2024)
        for _ in range(2000):
            n = rng.randrange(3, 11)
            seq = tuple(rng.randrange(1, n + 1) for _ in range(n))
            self.check(seq)

    def test_all_valid(self, quiddities_by_n):
        for n in range(3, 11):
            for seq in quiddities_by_n[n]:
                self.check(seq)


def test_parse_and_format():
    assert eta.parse_sequence("2,1,3,1,2") == (2, 1, 3, 1, 2)
    assert eta.format_sequence((2, 1, 3, 1, 2)) == "2,1,3,1,2"
    assert eta.parse_sequence_loose("1,4") == (1, 4)
    with pytest.raises(InvalidSequenceError):
        eta.parse_sequence("1,1")
    with pytest.raises(InvalidSequenceError):
        eta.parse_sequence("1,x,2")
    with pytest.raises(InvalidSequenceError):
        eta.parse_sequence_loose("0,3")
