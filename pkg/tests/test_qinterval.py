from fractions import Fraction

import pytest

from scx.qinterval import (
    QI, StraddleError, pi_interval, sin_of_pi_multiple, cos_of_pi_multiple,
    signature_rational, signature_interval, precision_schedule,
)

PI_REF = Fraction(
    31415926535897932384626433832795028841971693993751058209749445923,
    10 ** 64)


def test_pi_interval_tight():
    p = pi_interval(100)
    assert p.lo <= PI_REF <= p.hi
    assert p.width() < Fraction(1, 2 ** 100)


def test_interval_ops():
    a = QI(1, 2)
    b = QI(-1, 1)
    assert (a + b).lo == 0 and (a + b).hi == 3
    assert (a * a).lo == 1 and (a * a).hi == 4
    assert b.contains_zero()
    with pytest.raises(StraddleError):
        b.sign()
    with pytest.raises(StraddleError):
        b.inv()
    assert (-a).sign() == -1
    assert QI(0, 0).sign() == 0


def test_sin_cos_special_values():
    bits = 80
    s = sin_of_pi_multiple(Fraction(1, 6), bits)   # sin(pi/6) = 1/2
    assert s.lo <= Fraction(1, 2) <= s.hi
    assert s.width() < Fraction(1, 2 ** 40)
    c = cos_of_pi_multiple(Fraction(1, 3), bits)   # cos(pi/3) = 1/2
    assert c.lo <= Fraction(1, 2) <= c.hi
    c = cos_of_pi_multiple(Fraction(1, 2), bits)   # cos(pi/2) = 0
    assert c.lo <= 0 <= c.hi
    s = sin_of_pi_multiple(Fraction(3, 2), bits)   # sin(3pi/2) = -1
    assert s.lo <= -1 <= s.hi
    # periodicity
    c1 = cos_of_pi_multiple(Fraction(1, 5), bits)
    c2 = cos_of_pi_multiple(Fraction(11, 5), bits)
    assert not (c1.hi < c2.lo or c2.hi < c1.lo)


def test_signature_rational():
    m = [[Fraction(2), Fraction(0)], [Fraction(0), Fraction(-3)]]
    assert signature_rational(m) == (1, 1, 0)
    m = [[Fraction(0), Fraction(1)], [Fraction(1), Fraction(0)]]
    assert signature_rational(m) == (1, 1, 0)
    m = [[Fraction(0)] * 3 for _ in range(3)]
    assert signature_rational(m) == (0, 0, 3)
    # 3x3 with known inertia: diag(1, -1, 0) after congruence
    m = [[Fraction(1), Fraction(2), Fraction(3)],
         [Fraction(2), Fraction(4), Fraction(6)],
         [Fraction(3), Fraction(6), Fraction(9)]]
    assert signature_rational(m) == (1, 0, 2)
    m = [[Fraction(1), Fraction(2)], [Fraction(2), Fraction(1)]]
    assert signature_rational(m) == (1, 1, 0)


def test_signature_interval_matches_rational():
    # interval version on a rational matrix with tiny fuzz
    eps = Fraction(1, 2 ** 80)
    def fuzz(v):
        return QI(Fraction(v) - eps, Fraction(v) + eps)
    m = [[fuzz(1), fuzz(2)], [fuzz(2), fuzz(1)]]
    assert signature_interval(m) == (1, 1)
    m = [[fuzz(0), fuzz(3)], [fuzz(3), fuzz(0)]]
    assert signature_interval(m) == (1, 1)
    m = [[fuzz(-2), fuzz(0)], [fuzz(0), fuzz(-5)]]
    assert signature_interval(m) == (0, 2)


def test_signature_interval_straddle():
    wide = QI(-1, 1)
    with pytest.raises(StraddleError):
        signature_interval([[wide]])


def test_precision_schedule_env(monkeypatch):
    monkeypatch.setenv("SCX_PRECISION_BITS", "32")
    sched = precision_schedule()
    assert sched[0] == 32 and sched == sorted(sched)
