"""State constructors: amplitudes, exact mirrors, support structure."""

import math
from fractions import Fraction
from math import factorial

import pytest

from qk_eigenlab.scalars import ComplexRational
from qk_eigenlab.states import (
    EigenstateParams,
    eigen_state_qk,
    entangled_state_vector,
    hermite_scaled_table,
    pair_coherent_state,
)

F = Fraction


def test_params_validation():
    with pytest.raises(ValueError):
        EigenstateParams(-1, F(0), 10)
    with pytest.raises(ValueError):
        EigenstateParams(5, F(0), 3)
    p = EigenstateParams(2, F(1, 2), 10)
    assert p.n_max == 8
    assert p.eigenvalue == F(1, 2)


def test_pair_coherent_alpha_zero():
    st = pair_coherent_state(0, 0, 6)
    assert st.support() == [(0, 0)]
    assert st.amplitude((0, 0)) == 1.0


def test_pair_coherent_amplitudes():
    st = pair_coherent_state(2, ComplexRational.of(1), 6)
    for n in range(5):
        expected = 1.0 / math.sqrt(factorial(n + 2) * factorial(n))
        assert st.amplitude((n + 2, n)) == pytest.approx(expected, rel=1e-14)
    # support confined to the charge-2 line
    assert all(na - nb == 2 for na, nb in st.support())


def test_pair_coherent_float_alpha():
    st = pair_coherent_state(1, 0.5 + 0.25j, 8)
    assert st.exact is None
    amp = (0.5 + 0.25j) ** 3 / math.sqrt(factorial(4) * factorial(3))
    assert st.amplitude((4, 3)) == pytest.approx(amp, rel=1e-13)


def test_entangled_at_origin():
    st = entangled_state_vector(ComplexRational.of(0), 5)
    assert st.support() == [(l, l) for l in range(6)]
    for l in range(6):
        assert st.amplitude((l, l)) == pytest.approx((-1.0) ** l, rel=1e-12)


def test_entangled_low_amplitudes():
    z = ComplexRational.of(F(1, 2), F(1, 3))
    st = entangled_state_vector(z, 6)
    pref = math.exp(-float(z.abs2()) / 2)
    assert st.amplitude((0, 0)) == pytest.approx(pref, rel=1e-14)
    assert st.amplitude((1, 0)) == pytest.approx(pref * z.to_complex(), rel=1e-14)
    assert st.amplitude((0, 1)) == pytest.approx(pref * z.conjugate().to_complex(), rel=1e-14)


def test_entangled_float_matches_exact():
    zc = ComplexRational.of(F(3, 5), F(4, 5))
    exact_state = entangled_state_vector(zc, 7)
    float_state = entangled_state_vector(zc.to_complex(), 7)
    assert exact_state.support() == float_state.support()
    for idx in exact_state.support():
        assert exact_state.amplitude(idx) == pytest.approx(float_state.amplitude(idx), rel=1e-10)
    # float mirrors equal prefactor times the exact values by construction
    for idx, amp in exact_state.exact.items():
        assert exact_state.amplitude(idx) == exact_state.exact_prefactor * amp.to_complex()


def test_scaled_table_matches_polynomials():
    from qk_eigenlab.hermite import hermite2_poly

    u, v = 0.7 + 0.2j, 0.1 - 0.9j
    tab = hermite_scaled_table(u, v, 6, 6)
    for m in range(7):
        for n in range(7):
            direct = complex(
                sum(
                    float(c) * u**e1 * v**e2
                    for (e1, e2), c in hermite2_poly(m, n).monomials()
                )
            )
            scaled = direct / math.sqrt(factorial(m) * factorial(n))
            assert tab[m][n] == pytest.approx(scaled, rel=1e-12, abs=1e-12)


def test_eigen_state_amplitudes():
    # n=0 layer carries sqrt(q!)
    st = eigen_state_qk(EigenstateParams(3, F(1), 10))
    assert st.amplitude((3, 0)) == pytest.approx(math.sqrt(6.0), rel=1e-14)
    # q=0: layer 1 amplitude is F(1) = -(k+1)
    st = eigen_state_qk(EigenstateParams(0, F(2), 8))
    assert st.amplitude((1, 1)) == pytest.approx(-3.0, rel=1e-14)
    # (q=2, k=1): layer 1 vanishes and is not stored
    st = eigen_state_qk(EigenstateParams(2, F(1), 8))
    assert (3, 1) not in st.amplitudes
    assert all(na - nb == 2 for na, nb in st.support())


def test_eigen_state_exact_mirror():
    st = eigen_state_qk(EigenstateParams(1, F(1, 2), 9))
    assert st.exact is not None
    for idx, amp in st.exact.items():
        assert st.amplitude(idx) == amp.to_complex()
