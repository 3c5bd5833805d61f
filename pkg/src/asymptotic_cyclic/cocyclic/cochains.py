"""無限台コチェインの有限切断と (b+B) 微分"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass
from typing import Any

from asymptotic_cyclic.cocyclic.chains import Scalar
from asymptotic_cyclic.cocyclic.module import CocyclicModule
from asymptotic_cyclic.cocyclic.operators import connes_B, hochschild_b

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TruncatedCochain:
    """パリティ i の有限切断 (φ_i, φ_{i+2}, …, φ_{i+2N})

    truncated_top が真なら最上位成分は切断境界にあり、閉性の判定から除外する。
    """

    parity: int
    components: tuple[Any, ...]
    norms: tuple[Scalar, ...] | None = None
    truncated_top: bool = False

    def __post_init__(self) -> None:
        if self.parity not in (0, 1):
            msg = f"parity must be 0 or 1, got {self.parity}"
            raise ValueError(msg)
        if not self.components:
            msg = "a truncated cochain needs at least one component"
            raise ValueError(msg)

    @property
    def length(self) -> int:
        """切断長 N（成分数 − 1）"""
        return len(self.components) - 1

    def degree(self, k: int) -> int:
        """k 番目の成分の次数 i + 2k"""
        return self.parity + 2 * k

    @property
    def top_degree(self) -> int:
        """最上位成分の次数"""
        return self.degree(self.length)

    def component_at(self, degree: int) -> Any | None:
        """次数 degree の成分（範囲外やパリティ違いは None）"""
        if degree < self.parity or (degree - self.parity) % 2:
            return None
        k = (degree - self.parity) // 2
        return self.components[k] if k < len(self.components) else None

    @classmethod
    def from_components(cls, m: CocyclicModule[Any], parity: int, components: Sequence[Any], *, truncated_top: bool = False) -> TruncatedCochain:
        """成分列から作り、ノルム評価があればノルム列も付ける"""
        for k, x in enumerate(components):
            m.validate(parity + 2 * k, x)
        norms = [m.norm(parity + 2 * k, x) for k, x in enumerate(components)]
        return cls(
            parity=parity,
            components=tuple(components),
            norms=None if any(v is None for v in norms) else tuple(norms),  # type: ignore[arg-type]
            truncated_top=truncated_top,
        )

    def closed_degrees(self) -> list[int]:
        """閉性の判定に使う次数（切断境界を除く）"""
        count = self.length if self.truncated_top else self.length + 1
        return [self.degree(k) for k in range(count)]


def periodic_differential(m: CocyclicModule[Any], c: TruncatedCochain) -> TruncatedCochain:
    """(b+B) を有限切断に適用し、逆パリティの切断を返す

    出力の次数 j 成分は b(φ_{j−1}) + B(φ_{j+1})。φ_{j+1} が切断の外にある最上位成分には
    truncated_top を立てる。

    Raises:
        ValueError: 切断長 N < 1 の場合
    """
    if c.length < 1:
        msg = f"periodic_differential needs truncation N >= 1, got {c.length}"
        raise ValueError(msg)

    out_parity = 1 - c.parity
    top = c.top_degree + 1
    components = []
    for degree in range(out_parity, top + 1, 2):
        total = m.zero(degree)
        below = c.component_at(degree - 1)
        if below is not None:
            total = total + hochschild_b(m, degree - 1, below)
        above = c.component_at(degree + 1)
        if above is not None:
            total = total + connes_B(m, degree + 1, above)
        components.append(total)
    logger.debug("(b+B) applied: parity %d -> %d, top degree %d flagged", c.parity, out_parity, top)
    return TruncatedCochain.from_components(m, out_parity, components, truncated_top=True)


def closure_residues(m: CocyclicModule[Any], c: TruncatedCochain) -> list[tuple[int, bool]]:
    """(b+B)c の境界外成分が零かどうかの一覧 [(次数, 零か)]"""
    image = periodic_differential(m, c)
    return [(degree, m.is_zero(degree, image.component_at(degree))) for degree in image.closed_degrees()]
