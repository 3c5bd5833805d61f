"""構造写像のノルムによる漸近正規化"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

import numpy as np
from pydantic import BaseModel

from asymptotic_cyclic.cocyclic.chains import Scalar
from asymptotic_cyclic.cocyclic.exceptions import NormalizationError
from asymptotic_cyclic.cocyclic.identities import IdentityCheck, IdentitySuite, check_identities
from asymptotic_cyclic.cocyclic.module import CocyclicModule
from asymptotic_cyclic.cocyclic.operators import connes_B, hochschild_b

logger = logging.getLogger(__name__)


def _as_scalar(value: Scalar) -> Scalar:
    if isinstance(value, int | Fraction):
        return Fraction(value)
    return float(value)


def _inverse(value: Scalar) -> Scalar:
    return 1 / value if isinstance(value, float) else Fraction(1) / value


@dataclass(frozen=True)
class NormTable:
    """次数ごとの ‖d₀ⁿ‖ と ‖s₀‖ の表

    coface[n] は C^n → C^{n+1} の d₀、codegeneracy[n] は C^{n+1} → C^n の s₀ のノルム。
    表の外の次数では最後の値を使う。
    """

    coface: tuple[Scalar, ...]
    codegeneracy: tuple[Scalar, ...]

    def __post_init__(self) -> None:
        for name, values in (("coface", self.coface), ("codegeneracy", self.codegeneracy)):
            if not values:
                msg = f"{name} norm table is empty"
                raise NormalizationError(msg)
            for n, v in enumerate(values):
                if isinstance(v, complex) or v <= 0:
                    msg = f"{name} norm in degree {n} must be positive, got {v}"
                    raise NormalizationError(msg)

    def d0(self, n: int) -> Scalar:
        """‖d₀ⁿ‖"""
        return self.coface[min(n, len(self.coface) - 1)]

    def s0(self, n: int) -> Scalar:
        """C^{n+1} → C^n の ‖s₀‖"""
        return self.codegeneracy[min(n, len(self.codegeneracy) - 1)]

    def psi(self, n: int) -> Scalar:
        """ψ_n = ‖d₀ⁿ‖·‖s₀‖"""
        return self.d0(n) * self.s0(n)


@dataclass(frozen=True)
class ScalarAutomorphism:
    """次数ごとのスカラー倍 ψ_n·Id"""

    table: NormTable

    def scalar(self, n: int) -> Scalar:
        """ψ_n"""
        return self.table.psi(n)

    def __call__(self, n: int, x: Any) -> Any:
        return x * self.scalar(n)


class NormalizedModule[E](CocyclicModule[E]):
    """δ = d/‖d₀‖, σ = s/‖s₀‖, t はそのままの加群

    σ_j δ_i = ψ_n⁻¹ Id（i ∈ {j, j+1}）なので unit_scale は ψ_n を返す。
    """

    def __init__(self, base: CocyclicModule[E], table: NormTable) -> None:
        self.base = base
        self.table = table
        self.name = f"normalized({base.name})"
        self.exact = base.exact
        self.tolerance = base.tolerance

    def unit_scale(self, n: int) -> Scalar:
        return self.table.psi(n)

    def norm(self, n: int, x: E) -> Scalar | None:
        return self.base.norm(n, x)

    def describe(self, x: E) -> str:
        return self.base.describe(x)

    def degree_of(self, x: E) -> int | None:
        return self.base.degree_of(x)

    def zero(self, n: int) -> E:
        return self.base.zero(n)

    def is_zero(self, n: int, x: E) -> bool:
        return self.base.is_zero(n, x)

    def sample(self, n: int, rng: np.random.Generator) -> E:
        return self.base.sample(n, rng)

    def _coface(self, i: int, n: int, x: E) -> E:
        return self.base.coface(i, n, x) * _inverse(self.table.d0(n))  # type: ignore[operator]

    def _codegeneracy(self, j: int, n: int, x: E) -> E:
        return self.base.codegeneracy(j, n, x) * _inverse(self.table.s0(n - 1))  # type: ignore[operator]

    def _cyclic(self, n: int, x: E) -> E:
        return self.base.cyclic(n, x)


def asymptotic_normalize[E](
    m: CocyclicModule[E], coface_norms: Sequence[Scalar], codegeneracy_norms: Sequence[Scalar]
) -> tuple[NormalizedModule[E], ScalarAutomorphism]:
    """ノルム表で構造写像を割り、漸近正規化された加群と ψ を返す

    Args:
        m: 元の加群
        coface_norms: ‖d₀ⁿ‖（n = 0, 1, …）
        codegeneracy_norms: C^{n+1} → C^n の ‖s₀‖（n = 0, 1, …）

    Returns:
        tuple[NormalizedModule, ScalarAutomorphism]: 正規化された加群と ψ

    Raises:
        NormalizationError: ノルムが空・0・負の場合
    """
    table = NormTable(tuple(_as_scalar(v) for v in coface_norms), tuple(_as_scalar(v) for v in codegeneracy_norms))
    logger.debug("normalizing %s with d0 norms %s and s0 norms %s", m.name, table.coface, table.codegeneracy)
    return NormalizedModule(m, table), ScalarAutomorphism(table)


class NormalizationReport(BaseModel):
    """正規化の検査結果"""

    module: str
    max_degree: int
    psi: list[str]
    checks: list[IdentityCheck]

    model_config = {"frozen": True}

    @property
    def passed(self) -> bool:
        """全検査が通ったか"""
        return all(c.passed for c in self.checks)


def normalization_report(
    original: CocyclicModule[Any], normalized: NormalizedModule[Any], psi: ScalarAutomorphism, max_degree: int, samples: int = 3, seed: int = 0
) -> NormalizationReport:
    """ψ が構造写像と可換であること、ψσδ = Id、b̃B̃ + B̃b̃ = 0、b̃ = b/‖d₀‖ を検査する

    ψ_n が次数によらない定数でなければ可換性と反交換性は一般に成り立たず、失敗として報告される。
    """
    rng = np.random.default_rng(seed)
    suite = IdentitySuite(normalized)
    m = normalized
    for n in range(max_degree + 1):
        xs = [m.sample(n, rng) for _ in range(samples)]
        suite.run(
            "psi d = d psi",
            n,
            [(f"i={i}", x, lambda x, i=i: (n + 1, psi(n + 1, m.coface(i, n, x)), m.coface(i, n, psi(n, x)))) for x in xs for i in range(n + 2)],
        )
        suite.run("psi t = t psi", n, [("", x, lambda x: (n, psi(n, m.cyclic(n, x)), m.cyclic(n, psi(n, x)))) for x in xs])
        suite.run(
            "psi sigma delta = Id",
            n,
            [(f"i={i}, j={j}", x, lambda x, i=i, j=j: (n, psi(n, m.codegeneracy(j, n + 1, m.coface(i, n, x))), x)) for x in xs for j in range(n + 1) for i in (j, j + 1)],
        )
        scale = psi.table.d0(n)
        suite.run("b~ |d0| = b", n, [("", x, lambda x: (n + 1, hochschild_b(m, n, x) * scale, hochschild_b(original, n, x))) for x in xs])
        if n >= 1:
            suite.run(
                "psi s = s psi",
                n,
                [(f"j={j}", x, lambda x, j=j: (n - 1, psi(n - 1, m.codegeneracy(j, n, x)), m.codegeneracy(j, n, psi(n, x)))) for x in xs for j in range(n)],
            )
            suite.run(
                "b~ B~ + B~ b~ = 0",
                n,
                [("", x, lambda x: (n, hochschild_b(m, n - 1, connes_B(m, n, x)) + connes_B(m, n + 1, hochschild_b(m, n, x)), m.zero(n))) for x in xs],
            )

    identities = check_identities(normalized, max_degree, samples=samples, seed=seed)
    checks = [*suite.checks, *identities.checks]
    report = NormalizationReport(module=normalized.name, max_degree=max_degree, psi=[str(psi.scalar(n)) for n in range(max_degree + 1)], checks=checks)
    logger.info("%s: normalization checks passed=%s", normalized.name, report.passed)
    return report
