import numpy as np
import pytest

from fdpc.matrix import BinaryMatrix

from reference_data import T5_BASE1_ROWS, rows_to_incidences


def random_matrix(rng, rows, cols, p=0.2):
    incidences = [(r, c) for r in range(rows) for c in range(cols) if rng.random() < p]
    return BinaryMatrix.from_incidences(rows, cols, incidences)


def test_identity_from_incidences():
    m = BinaryMatrix.from_incidences(2, 2, [(0, 0), (1, 1)])
    assert m.col_supports == ((0,), (1,))
    assert m.row_supports == ((0,), (1,))


def test_from_incidences_printed_t5_matrix():
    m = BinaryMatrix.from_incidences(10, 25, rows_to_incidences(T5_BASE1_ROWS))
    assert m.col_supports[0] == (0, 1)
    assert m.col_supports[24] == (0, 9)


def test_from_incidences_duplicate_rejected():
    with pytest.raises(ValueError, match="duplicate"):
        BinaryMatrix.from_incidences(3, 3, [(0, 0), (0, 0)])


def test_from_incidences_out_of_range_rejected():
    with pytest.raises(ValueError, match="out of range"):
        BinaryMatrix.from_incidences(2, 2, [(2, 0)])


def test_syndrome_identity():
    m = BinaryMatrix.from_incidences(2, 2, [(0, 0), (1, 1)])
    assert m.syndrome([1, 0]).tolist() == [1, 0]


def test_syndrome_known_codeword():
    # Positions 1, 2, 3, 10 (1-based) form a codeword of the t=5 base code.
    m = BinaryMatrix.from_incidences(10, 25, rows_to_incidences(T5_BASE1_ROWS))
    c = np.zeros(25, dtype=np.uint8)
    c[[0, 1, 2, 9]] = 1
    assert not m.syndrome(c).any()


def test_syndrome_single_one():
    m = BinaryMatrix.from_incidences(10, 25, rows_to_incidences(T5_BASE1_ROWS))
    c = np.zeros(25, dtype=np.uint8)
    c[0] = 1
    assert m.syndrome(c).tolist() == [1, 1] + [0] * 8


def test_syndrome_length_mismatch():
    m = BinaryMatrix.from_incidences(2, 2, [(0, 0), (1, 1)])
    with pytest.raises(ValueError):
        m.syndrome([1, 0, 1])


def test_syndrome_gf2_linearity():
    rng = np.random.default_rng(7)
    m = random_matrix(rng, 12, 30)
    for _ in range(20):
        x = rng.integers(0, 2, 30, dtype=np.uint8)
        y = rng.integers(0, 2, 30, dtype=np.uint8)
        lhs = m.syndrome(x ^ y)
        rhs = m.syndrome(x) ^ m.syndrome(y)
        assert lhs.tolist() == rhs.tolist()


def test_support_cross_consistency():
    rng = np.random.default_rng(3)
    m = random_matrix(rng, 9, 17)
    rebuilt = [[] for _ in range(m.rows)]
    for c, sup in enumerate(m.col_supports):
        for r in sup:
            rebuilt[r].append(c)
    assert tuple(tuple(s) for s in rebuilt) == m.row_supports


def test_alist_identity_2x2():
    m = BinaryMatrix.from_incidences(2, 2, [(0, 0), (1, 1)])
    assert m.to_alist() == "2 2\n1 1\n1 1\n1 1\n1\n2\n1\n2\n"


def test_alist_roundtrip_random():
    rng = np.random.default_rng(11)
    for _ in range(10):
        m = random_matrix(rng, int(rng.integers(1, 15)), int(rng.integers(1, 25)))
        assert BinaryMatrix.from_alist(m.to_alist()) == m


def test_alist_bad_column_weight():
    m = BinaryMatrix.from_incidences(2, 2, [(0, 0), (1, 1)])
    text = m.to_alist().splitlines()
    text[2] = "2 1"  # claim column 1 has two entries
    with pytest.raises(ValueError):
        BinaryMatrix.from_alist("\n".join(text) + "\n")


def test_alist_out_of_range_index():
    bad = "2 2\n1 1\n1 1\n1 1\n3\n2\n1\n2\n"
    with pytest.raises(ValueError):
        BinaryMatrix.from_alist(bad)


def test_alist_truncated():
    with pytest.raises(ValueError):
        BinaryMatrix.from_alist("2 2\n1 1\n")
