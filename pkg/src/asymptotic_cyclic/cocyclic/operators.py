"""構造写像から導かれる作用素 b, b′, λ, N, B"""

from __future__ import annotations

from typing import Any

from asymptotic_cyclic.cocyclic.exceptions import DegreeMismatchError
from asymptotic_cyclic.cocyclic.module import CocyclicModule


def _sign(k: int) -> int:
    return -1 if k % 2 else 1


def cyclic_power(m: CocyclicModule[Any], n: int, x: Any, k: int) -> Any:
    """t_n^k x（k は n+1 を法として扱う、負の k は逆元）"""
    y = x
    for _ in range(k % (n + 1)):
        y = m.cyclic(n, y)
    return y


def cyclic_lambda(m: CocyclicModule[Any], n: int, x: Any) -> Any:
    """λ_n = (−1)ⁿ t_n"""
    return m.cyclic(n, x) * _sign(n)


def hochschild_b(m: CocyclicModule[Any], n: int, x: Any) -> Any:
    """b = Σ_{i=0}^{n+1} (−1)^i d_i: C^n → C^{n+1}"""
    total = m.zero(n + 1)
    for i in range(n + 2):
        total = total + m.coface(i, n, x) * _sign(i)
    return total


def bar_b_prime(m: CocyclicModule[Any], n: int, x: Any) -> Any:
    """b′ = Σ_{i=0}^{n} (−1)^i d_i: C^n → C^{n+1}"""
    total = m.zero(n + 1)
    for i in range(n + 1):
        total = total + m.coface(i, n, x) * _sign(i)
    return total


def cyclic_N(m: CocyclicModule[Any], n: int, x: Any) -> Any:
    """N_n = Σ_{i=0}^{n} λ^i: C^n → C^n"""
    m.validate(n, x)
    total = x
    y = x
    for _ in range(n):
        y = cyclic_lambda(m, n, y)
        total = total + y
    return total


def one_minus_lambda(m: CocyclicModule[Any], n: int, x: Any) -> Any:
    """Id − λ_n"""
    return x - cyclic_lambda(m, n, x)


def connes_B(m: CocyclicModule[Any], n: int, x: Any) -> Any:
    """B_n = N_{n−1} s_{n−1} t_n (Id − (−1)ⁿ t_n): C^n → C^{n−1}"""
    if n < 1:
        msg = f"connes_B needs degree >= 1, got {n}"
        raise DegreeMismatchError(msg, expected=1, actual=n)
    y = one_minus_lambda(m, n, x)
    y = m.cyclic(n, y)
    y = m.codegeneracy(n - 1, n, y)
    return cyclic_N(m, n - 1, y)
