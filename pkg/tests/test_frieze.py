import random

import pytest

from quiddity import eta, frieze, sl2
from quiddity.errors import NotQuiddityError

PATTERN_I = (4, 2, 1, 3, 2, 2, 1)


def test_triangle_rows():
    w = frieze.generate_frieze((1, 1, 1))
    assert w.rows == ((0, 0, 0), (1, 1, 1), (1, 1, 1), (0, 0, 0))
    assert frieze.has_ones_row(w) == 2


def test_pentagon_rows():
    w = frieze.generate_frieze((1, 2, 2, 1, 3))
    assert w.rows[3] == (1, 3, 1, 2, 2)
    assert w.rows[4] == (1, 1, 1, 1, 1)
    assert frieze.has_ones_row(w) == 4


def test_square_ones_row():
    assert frieze.has_ones_row(frieze.generate_frieze((2, 1, 2, 1))) == 3


def test_pattern_i_interior_rows():
    w = frieze.generate_frieze(PATTERN_I)
    # the hand-drawn layout shows row 3 starting one column to the left
    assert tuple(w.value(3, j) for j in range(-1, 6)) == (3, 7, 1, 2, 5, 3, 1)
    assert tuple(w.value(4, j) for j in range(-1, 6)) == (5, 3, 1, 3, 7, 1, 2)
    assert tuple(w.value(5, j) for j in range(-2, 5)) == (3, 2, 2, 1, 4, 2, 1)
    assert frieze.has_ones_row(w) == 6


def test_render_pattern_i():
    w = frieze.generate_frieze(PATTERN_I)
    assert frieze.render_frieze(w) == "\n".join(
        [
            "1  1  1  1  1  1  1",
            "  4  2  1  3  2  2  1",
            "3  7  1  2  5  3  1",
            "  5  3  1  3  7  1  2",
            "3  2  2  1  4  2  1",
            "  1  1  1  1  1  1  1",
        ]
    )


def test_short_period_imposter_is_rejected():
    # (1,2) repeated to length 6 behaves like the valid length-4 sequence
    # at first (ones at row 3, zeros at 4), but the frieze cannot reach
    # row n: the diamond rule runs into 0/0 at row 6
    assert not eta.is_eta((1, 2, 1, 2, 1, 2))
    with pytest.raises(NotQuiddityError) as err:
        frieze.generate_frieze((1, 2, 1, 2, 1, 2))
    assert err.value.row == 6


def test_quiddity_row_of_ones_does_not_count_for_long_sequences():
    w = frieze.generate_frieze((1, 1, 1, 1))
    assert w.rows[2] == (1, 1, 1, 1)
    assert frieze.has_ones_row(w) is None


def test_division_failure_carries_cell():
    with pytest.raises(NotQuiddityError) as err:
        frieze.generate_frieze((1, 1, 1, 1, 1))
    assert err.value.row == 5 and err.value.col is not None


def test_formal_row_above_zero_row():
    # solving the diamond rule upwards from rows 0 and 1 gives constant -1
    zero, one = 0, 1
    assert (zero * zero - 1) // one == -1


@pytest.mark.parametrize("seq", [(), (5,), (2, 1)])
def test_continuant_base_cases(seq):
    expected = {(): 1, (5,): 5, (2, 1): 1}[seq]
    assert frieze.continuant(seq) == expected


def test_continuant_matches_tridiagonal_determinant():
    # brute-force determinant by cofactor expansion as the independent oracle
    def det(mat):
        n = len(mat)
        if n == 0:
            return 1
        if n == 1:
            return mat[0][0]
        total = 0
        for col in range(n):
            minor = [row[:col] + row[col + 1:] for row in mat[1:]]
            total += (-1) ** col * mat[0][col] * det(minor)
        return total

    rng = random.Random(3)
    for _ in range(30):
        entries = [rng.randrange(1, 6) for _ in range(rng.randrange(0, 6))]
        k = len(entries)
        mat = [
            [entries[r] if r == c else 1 if abs(r - c) == 1 else 0 for c in range(k)]
            for r in range(k)
        ]
        assert frieze.continuant(entries) == det(mat)


def test_continuant_equals_frieze_cells(quiddities_by_n):
    for n in range(3, 10):
        for q in quiddities_by_n[n]:
            w = frieze.generate_frieze(q)
            for i in range(1, n + 1):
                for j in range(n):
                    window = [q[(j + t) % n] for t in range(i - 1)]
                    assert frieze.continuant(window) == w.rows[i][j], (q, i, j)


def test_glide_rows(quiddities_by_n):
    for n in range(3, 13):
        for q in quiddities_by_n[n]:
            w = frieze.generate_frieze(q)
            assert w.rows[n - 1] == (1,) * n
            assert w.rows[n] == (0,) * n


def test_diamond_rule_holds_at_every_cell(quiddities_by_n):
    for n in range(3, 10):
        for q in quiddities_by_n[n]:
            w = frieze.generate_frieze(q)
            for i in range(2, n + 1):
                for j in range(n):
                    jn = (j + 1) % n
                    lhs = w.rows[i][j] * w.rows[i - 2][jn]
                    assert lhs == w.rows[i - 1][jn] * w.rows[i - 1][j] - 1, (q, i, j)


class TestMatrixFrieze:
    def test_triangle_cells(self):
        mw = frieze.generate_matrix_frieze((1, 1, 1))
        assert mw.cell(0, 0) == -sl2.S
        assert mw.cell(1, 0) == sl2.U
        assert mw.cell(2, 0) == sl2.U @ sl2.S @ sl2.U

    def test_square_final_row_is_s(self):
        mw = frieze.generate_matrix_frieze((2, 1, 2, 1))
        assert all(mw.cell(4, j) == sl2.S for j in range(4))

    def test_lower_left_recovers_integer_frieze(self):
        q = (1, 2, 2, 1, 3)
        w = frieze.generate_frieze(q)
        mw = frieze.generate_matrix_frieze(q)
        for i in range(1, len(q) + 1):
            for j in range(len(q)):
                assert mw.cell(i - 1, j).c == w.rows[i][j]

    def test_determinants(self):
        mw = frieze.generate_matrix_frieze((4, 2, 1, 3, 2, 2, 1))
        for row in mw.cells:
            for m in row:
                assert m.a * m.d - m.b * m.c == 1

    def test_general_rows_match_direct_product(self):
        rng = random.Random(17)
        gens = [sl2.S, sl2.T, sl2.U, sl2.U.inverse()]
        for _ in range(10):
            x_inv = sl2.I
            for _ in range(rng.randrange(0, 6)):
                x_inv = x_inv @ rng.choice(gens)
            x = x_inv.inverse()
            n = rng.randrange(2, 5)
            row1 = []
            for _ in range(n):
                m = sl2.I
                for _ in range(rng.randrange(0, 6)):
                    m = m @ rng.choice(gens)
                row1.append(m)
            rows = frieze.generate_matrix_frieze_rows(x_inv, row1, depth=5)
            for i in range(2, 6):
                for j in range(n):
                    direct = row1[(i + j - 1) % n]
                    for t in range(i + j - 2, j - 1, -1):
                        direct = direct @ x @ row1[t % n]
                    assert rows[i][j] == direct, (i, j)


def test_matrix_and_integer_friezes_consistent(quiddities_by_n):
    for n in range(3, 9):
        for q in quiddities_by_n[n]:
            w = frieze.generate_frieze(q)
            mw = frieze.generate_matrix_frieze(q)
            for i in range(1, n + 1):
                for j in range(n):
                    assert mw.cell(i - 1, j).c == w.rows[i][j]
