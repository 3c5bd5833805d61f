"""余単体・余巡回恒等式とノルム評価の検査スイート"""

from __future__ import annotations

import logging
from collections.abc import Callable
from typing import Any

import numpy as np
from pydantic import BaseModel, Field

from asymptotic_cyclic.cocyclic.module import CocyclicModule
from asymptotic_cyclic.cocyclic.operators import bar_b_prime, connes_B, cyclic_N, cyclic_power, hochschild_b, one_minus_lambda

logger = logging.getLogger(__name__)


class IdentityCheck(BaseModel):
    """1つの恒等式族・次数についての検査結果"""

    name: str
    degree: int
    passed: bool
    evaluations: int = Field(..., description="評価した (添字, 標本) の組の数")
    witness: str | None = Field(default=None, description="最初の反例（添字と元）")

    model_config = {"frozen": True}


class IdentityReport(BaseModel):
    """検査スイートのレポート"""

    module: str
    max_degree: int
    exact: bool
    samples: int
    checks: list[IdentityCheck]

    model_config = {"frozen": True}

    @property
    def passed(self) -> bool:
        """全検査が通ったか"""
        return all(c.passed for c in self.checks)

    def failures(self) -> list[IdentityCheck]:
        """失敗した検査"""
        return [c for c in self.checks if not c.passed]


class IdentitySuite:
    """検査結果を族・次数ごとに集約する"""

    def __init__(self, m: CocyclicModule[Any]) -> None:
        self.m = m
        self.checks: list[IdentityCheck] = []

    def run(self, name: str, degree: int, cases: list[tuple[str, Any, Callable[[Any], tuple[int, Any, Any]]]]) -> None:
        """cases の各 (ラベル, 標本, 評価関数) で両辺を比べる"""
        witness = None
        for label, x, evaluate in cases:
            target_degree, lhs, rhs = evaluate(x)
            if not self.m.equal(target_degree, lhs, rhs):
                witness = f"{label}; x = {self.m.describe(x)}"
                break
        self.checks.append(IdentityCheck(name=name, degree=degree, passed=witness is None, evaluations=len(cases), witness=witness))
        if witness is not None:
            logger.warning("%s: identity '%s' fails in degree %d (%s)", self.m.name, name, degree, witness)


def check_identities(m: CocyclicModule[Any], max_degree: int, samples: int = 3, seed: int = 0) -> IdentityReport:
    """余単体・余巡回恒等式と共役関係を次数 0..max_degree で検査する

    d_j d_i = d_i d_{j−1}、s_j s_i = s_i s_{j+1}、s_j d_i の3つの場合、t d_i = d_{i−1} t、
    t d_0 = d_{n+1}、t s_j = s_{j−1} t、t s_0 = s_{n−1} t²、t_n^{n+1} = Id、
    d_i = t^i d_0 t^{−i}、s_j = t^{−j} s_0 t^j を標本元で確かめる。

    Args:
        m: 検査する加群
        max_degree: 検査する最大次数（1以上）
        samples: 次数ごとの標本数
        seed: 乱数シード

    Returns:
        IdentityReport: 恒等式ごとの合否と反例
    """
    if max_degree < 1:
        msg = f"max_degree must be >= 1, got {max_degree}"
        raise ValueError(msg)

    rng = np.random.default_rng(seed)
    suite = IdentitySuite(m)
    d, s = m.coface, m.codegeneracy

    def t(n: int, x: Any, k: int = 1) -> Any:
        return cyclic_power(m, n, x, k)

    for n in range(max_degree + 1):
        xs = [m.sample(n, rng) for _ in range(samples)]
        unit = m.unit_scale(n)

        suite.run(
            "d_j d_i = d_i d_{j-1} (i < j)",
            n,
            [
                (f"i={i}, j={j}", x, lambda x, i=i, j=j: (n + 2, d(j, n + 1, d(i, n, x)), d(i, n + 1, d(j - 1, n, x))))
                for x in xs
                for i in range(n + 2)
                for j in range(i + 1, n + 3)
            ],
        )
        if n >= 2:
            suite.run(
                "s_j s_i = s_i s_{j+1} (i <= j)",
                n,
                [
                    (f"i={i}, j={j}", x, lambda x, i=i, j=j: (n - 2, s(j, n - 1, s(i, n, x)), s(i, n - 1, s(j + 1, n, x))))
                    for x in xs
                    for i in range(n - 1)
                    for j in range(i, n - 1)
                ],
            )

        mixed = []
        unit_cases = []
        for x in xs:
            for i in range(n + 2):
                for j in range(n + 1):
                    if i in (j, j + 1):
                        unit_cases.append((f"i={i}, j={j}", x, lambda x, i=i, j=j: (n, s(j, n + 1, d(i, n, x)) * unit, x)))
                    elif n >= 1 and i < j:
                        mixed.append((f"i={i}, j={j}", x, lambda x, i=i, j=j: (n, s(j, n + 1, d(i, n, x)), d(i, n - 1, s(j - 1, n, x)))))
                    elif n >= 1:
                        mixed.append((f"i={i}, j={j}", x, lambda x, i=i, j=j: (n, s(j, n + 1, d(i, n, x)), d(i - 1, n - 1, s(j, n, x)))))
        suite.run("s_j d_i = Id (i = j, j+1)", n, unit_cases)
        if mixed:
            suite.run("s_j d_i = d s (i != j, j+1)", n, mixed)

        suite.run(
            "t d_i = d_{i-1} t (1 <= i <= n+1)",
            n,
            [(f"i={i}", x, lambda x, i=i: (n + 1, m.cyclic(n + 1, d(i, n, x)), d(i - 1, n, m.cyclic(n, x)))) for x in xs for i in range(1, n + 2)],
        )
        suite.run("t d_0 = d_{n+1}", n, [("i=0", x, lambda x: (n + 1, m.cyclic(n + 1, d(0, n, x)), d(n + 1, n, x))) for x in xs])
        if n >= 2:
            suite.run(
                "t s_j = s_{j-1} t (1 <= j <= n-1)",
                n,
                [(f"j={j}", x, lambda x, j=j: (n - 1, m.cyclic(n - 1, s(j, n, x)), s(j - 1, n, m.cyclic(n, x)))) for x in xs for j in range(1, n)],
            )
        if n >= 1:
            suite.run("t s_0 = s_{n-1} t^2", n, [("j=0", x, lambda x: (n - 1, m.cyclic(n - 1, s(0, n, x)), s(n - 1, n, t(n, x, 2)))) for x in xs])

        # t_n^{n+1} を恒等写像と比べる（cyclic_power は法 n+1 で簡約するので直接反復する）
        def order(x: Any, n: int = n) -> tuple[int, Any, Any]:
            y = x
            for _ in range(n + 1):
                y = m.cyclic(n, y)
            return n, y, x

        suite.run(f"t_{n}^{n + 1} = Id", n, [("", x, order) for x in xs])

        suite.run(
            "d_i = t^i d_0 t^{-i}",
            n,
            [(f"i={i}", x, lambda x, i=i: (n + 1, d(i, n, x), t(n + 1, d(0, n, t(n, x, -i)), i))) for x in xs for i in range(n + 2)],
        )
        if n >= 1:
            suite.run(
                "s_j = t^{-j} s_0 t^j",
                n,
                [(f"j={j}", x, lambda x, j=j: (n - 1, s(j, n, x), t(n - 1, s(0, n, t(n, x, j)), -j))) for x in xs for j in range(n)],
            )

    report = IdentityReport(module=m.name, max_degree=max_degree, exact=m.exact, samples=samples, checks=suite.checks)
    logger.info("%s: %d identity checks through degree %d, passed=%s", m.name, len(report.checks), max_degree, report.passed)
    return report


def mixed_complex_checks(m: CocyclicModule[Any], max_degree: int, samples: int = 3, seed: int = 0) -> IdentityReport:
    """b² = 0, (b′)² = 0, B² = 0, bB + Bb = 0, (1−λ)N = 0 = N(1−λ) を検査する"""
    rng = np.random.default_rng(seed)
    suite = IdentitySuite(m)
    for n in range(max_degree + 1):
        xs = [m.sample(n, rng) for _ in range(samples)]
        zero = m.zero

        suite.run("b b = 0", n, [("", x, lambda x: (n + 2, hochschild_b(m, n + 1, hochschild_b(m, n, x)), zero(n + 2))) for x in xs])
        suite.run("b' b' = 0", n, [("", x, lambda x: (n + 2, bar_b_prime(m, n + 1, bar_b_prime(m, n, x)), zero(n + 2))) for x in xs])
        suite.run("(1 - lambda) N = 0", n, [("", x, lambda x: (n, one_minus_lambda(m, n, cyclic_N(m, n, x)), zero(n))) for x in xs])
        suite.run("N (1 - lambda) = 0", n, [("", x, lambda x: (n, cyclic_N(m, n, one_minus_lambda(m, n, x)), zero(n))) for x in xs])
        if n >= 1:
            suite.run(
                "b B + B b = 0",
                n,
                [("", x, lambda x: (n, hochschild_b(m, n - 1, connes_B(m, n, x)) + connes_B(m, n + 1, hochschild_b(m, n, x)), zero(n))) for x in xs],
            )
        if n >= 2:
            suite.run("B B = 0", n, [("", x, lambda x: (n - 2, connes_B(m, n - 1, connes_B(m, n, x)), zero(n - 2))) for x in xs])

    return IdentityReport(module=m.name, max_degree=max_degree, exact=m.exact, samples=samples, checks=suite.checks)


class NormCheck(BaseModel):
    """ノルム評価の1つの検査結果"""

    name: str
    degree: int
    passed: bool
    worst_ratio: float = Field(..., description="標本上の ‖T x‖/‖x‖ の最大値")
    bound: float
    witness: str | None = None

    model_config = {"frozen": True}


class NormReport(BaseModel):
    """norm_estimate_check のレポート"""

    module: str
    degree: int
    samples: int
    checks: list[NormCheck]

    model_config = {"frozen": True}

    @property
    def passed(self) -> bool:
        """全検査が通ったか"""
        return all(c.passed for c in self.checks)


def norm_estimate_check(m: CocyclicModule[Any], n: int, samples: int = 100, seed: int = 0) -> NormReport:
    """‖bφ‖ ≤ (n+2)‖φ‖, ‖b′φ‖ ≤ (n+1)‖φ‖, ‖Nφ‖ ≤ (n+1)‖φ‖, ‖tφ‖ = ‖φ‖ を標本で確かめる

    Raises:
        ValueError: 加群にノルム評価が無い場合
    """
    rng = np.random.default_rng(seed)
    xs = [m.sample(n, rng) for _ in range(samples)]
    if any(m.norm(n, x) is None for x in xs):
        msg = f"{m.name} has no norm evaluator"
        raise ValueError(msg)

    estimates: list[tuple[str, int, Callable[[Any], Any], int, bool]] = [
        ("|b x| <= (n+2)|x|", n + 1, lambda x: hochschild_b(m, n, x), n + 2, False),
        ("|b' x| <= (n+1)|x|", n + 1, lambda x: bar_b_prime(m, n, x), n + 1, False),
        ("|N x| <= (n+1)|x|", n, lambda x: cyclic_N(m, n, x), n + 1, False),
        ("|t x| = |x|", n, lambda x: m.cyclic(n, x), 1, True),
    ]
    checks = []
    for name, target_degree, operator, bound, isometry in estimates:
        worst = 0.0
        witness = None
        for x in xs:
            size = m.norm(n, x)
            if not size:
                continue
            image = m.norm(target_degree, operator(x))
            ratio = image / size  # type: ignore[operator]
            worst = max(worst, float(ratio))
            ok = (ratio == 1 if m.exact else abs(float(ratio) - 1) <= m.tolerance) if isometry else ratio <= bound * (1 + (0 if m.exact else m.tolerance))
            if not ok and witness is None:
                witness = m.describe(x)
        checks.append(NormCheck(name=name, degree=n, passed=witness is None, worst_ratio=worst, bound=float(bound), witness=witness))
    return NormReport(module=m.name, degree=n, samples=samples, checks=checks)
