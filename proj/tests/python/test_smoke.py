import pytest

import tlbasis as tl


def test_enumeration_sizes():
    assert [len(tl.enumerate_fc(n)) for n in range(1, 6)] == [2, 5, 14, 42, 132]
    assert len(tl.enumerate_pc(4)) == 42


def test_phi_psi_round_trip():
    x = tl.NoncrossingPartition(5, [[1, 6], [2, 3, 5], [4]])
    w = tl.phi(x)
    assert w.J == [1, 2, 3]
    assert w.I == [2, 4, 5]
    assert str(w) == "(s2 s1)(s4 s3 s2)(s5 s4 s3)"
    assert tl.psi(w) == x
    for w in tl.enumerate_fc(4):
        assert tl.phi(tl.psi(w)) == w


def test_laurent_arithmetic():
    d = tl.LaurentPoly.delta()
    assert (d * d).coefficients() == {-2: 1, 0: 2, 2: 1}
    big = tl.LaurentPoly({0: 10**30})
    assert (big * big).coefficients() == {0: 10**60}
    assert str(tl.LaurentPoly.v(-1)) == "v^-1"


def test_zinno_expansion():
    z = tl.zinno_element(tl.NoncrossingPartition(2, [[1, 2, 3]]))
    assert len(z.terms()) == 4


def test_matrices():
    m = tl.m_matrix(1)
    h = tl.h_matrix(1)
    assert str(m[0][1]) == "v^-1"
    assert str(h[1][1]) == "-1"


def test_x_basis():
    s2 = tl.FullyCommutative(3, [2], [2])
    assert tl.x_element(s2) == tl.TLElement.generator(2, 3)
    w = tl.FullyCommutative(4, [1, 2], [1, 4])
    assert len(tl.q_set(w)) == 8
    assert tl.x_lr(w, [1, 4], [], seed=3) == tl.x_lr(w, [1, 4], [])


def test_verify_reports():
    reports = tl.verify(2, ["catalan_counts", "thm_final_2"])
    assert [r["name"] for r in reports] == ["catalan_counts", "thm_final_2"]
    assert all(r["passed"] for r in reports)


def test_errors():
    with pytest.raises(tl.PreconditionError):
        tl.FullyCommutative(3, [2], [1])
    with pytest.raises(ValueError):
        tl.NoncrossingPartition(3, [[1, 3], [2, 4]])
