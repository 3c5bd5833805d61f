"""レポート用の値の直列化"""

from __future__ import annotations

from fractions import Fraction

ComplexPair = tuple[float, float]


def complex_pair(z: complex | float | Fraction) -> ComplexPair:
    """複素数を [re, im] の組にする"""
    w = complex(z)
    return (float(w.real), float(w.imag))


def fraction_str(x: Fraction | int) -> str:
    """有理数を "p/q" 表記にする"""
    return str(Fraction(x))
