import numpy as np
import pytest

from fdpc.construction import BaseVariant, build_fdpc
from fdpc.encoder import encode, is_codeword


@pytest.fixture(scope="module")
def fdpc_25_15():
    return build_fdpc(5, BaseVariant.BASE1, 0, 25, seed=0)


def solve_parities_by_substitution(code, m):
    """Oracle: solve A p^T = B m^T by forward substitution on the dense matrix."""
    dense = code.h.to_dense()
    msz = code.m_size
    a = dense[:, :msz]
    rhs = dense[:, msz:] @ m % 2
    p = np.zeros(msz, dtype=np.uint8)
    for i in range(msz):
        acc = rhs[i]
        for j in range(i):
            acc ^= a[i, j] & p[j]
        # a[i, i] == 1 (unit diagonal)
        p[i] = acc
    return p


def test_worked_first_parity(fdpc_25_15):
    m = np.zeros(15, dtype=np.uint8)
    m[[6, 11, 14]] = 1  # m_7 = m_12 = m_15 = 1
    cw = encode(fdpc_25_15, m)
    assert cw[0] == 1  # p_1 = m_7 + m_12 + m_15


def test_zero_message_gives_zero_codeword(fdpc_25_15):
    cw = encode(fdpc_25_15, np.zeros(15, dtype=np.uint8))
    assert not cw.any()


def test_unit_message_hand_computed(fdpc_25_15):
    # m = e_1: recursion hand-executed over the reference rows.
    m = np.zeros(15, dtype=np.uint8)
    m[0] = 1
    cw = encode(fdpc_25_15, m)
    assert cw[:10].tolist() == [0, 1, 1, 1, 0, 0, 0, 0, 0, 0]


def test_length_mismatch(fdpc_25_15):
    with pytest.raises(ValueError):
        encode(fdpc_25_15, np.zeros(14, dtype=np.uint8))


CONFIGS = [
    (16, BaseVariant.BASE1, 1, 256),
    (12, BaseVariant.BASE1, 1, 128),
    (23, BaseVariant.BASE2, 1, 256),
    (45, BaseVariant.BASE2, 1, 1024),
    (32, BaseVariant.BASE1, 2, 1024),
]


@pytest.mark.parametrize("t,variant,num_per,n", CONFIGS)
def test_random_messages_are_codewords(t, variant, num_per, n):
    code = build_fdpc(t, variant, num_per, n, seed=3)
    rng = np.random.default_rng(17)
    for _ in range(25):
        m = rng.integers(0, 2, code.k, dtype=np.uint8)
        cw = encode(code, m)
        assert not code.h.syndrome(cw).any()


def test_linearity():
    code = build_fdpc(12, BaseVariant.BASE1, 1, 128, seed=3)
    rng = np.random.default_rng(5)
    for _ in range(20):
        m1 = rng.integers(0, 2, code.k, dtype=np.uint8)
        m2 = rng.integers(0, 2, code.k, dtype=np.uint8)
        assert np.array_equal(encode(code, m1 ^ m2), encode(code, m1) ^ encode(code, m2))


def test_systematic_positions():
    code = build_fdpc(16, BaseVariant.BASE1, 1, 256, seed=3)
    rng = np.random.default_rng(9)
    m = rng.integers(0, 2, code.k, dtype=np.uint8)
    cw = encode(code, m)
    assert np.array_equal(cw[code.m_size:], m)


def test_matches_forward_substitution_oracle():
    rng = np.random.default_rng(23)
    for t, variant, num_per, n in [(5, BaseVariant.BASE1, 0, 25),
                                   (8, BaseVariant.BASE1, 1, 64),
                                   (9, BaseVariant.BASE2, 1, 45)]:
        code = build_fdpc(t, variant, num_per, n, seed=1)
        for _ in range(10):
            m = rng.integers(0, 2, code.k, dtype=np.uint8)
            cw = encode(code, m)
            assert np.array_equal(cw[:code.m_size], solve_parities_by_substitution(code, m))


def test_is_codeword(fdpc_25_15):
    rng = np.random.default_rng(4)
    m = rng.integers(0, 2, 15, dtype=np.uint8)
    cw = encode(fdpc_25_15, m)
    assert is_codeword(fdpc_25_15, cw)
    assert is_codeword(fdpc_25_15, np.zeros(25, dtype=np.uint8))
    for pos in range(25):
        flipped = cw.copy()
        flipped[pos] ^= 1
        assert not is_codeword(fdpc_25_15, flipped)
