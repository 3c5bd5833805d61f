"""有限次元の混合複体の厳密な表示（Betti数と良い切断）"""

from __future__ import annotations

import logging
from collections.abc import Hashable, Mapping, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Literal

import numpy as np
from pydantic import BaseModel

from asymptotic_cyclic.cocyclic.algebra import AlgebraCocyclicModule
from asymptotic_cyclic.cocyclic.chains import LinearCombination
from asymptotic_cyclic.cocyclic.exact import FractionMatrix, column_basis, fraction_matrix, is_zero, matmul, nullspace, rank, solve, zeros
from asymptotic_cyclic.cocyclic.exceptions import PresentationError
from asymptotic_cyclic.cocyclic.identities import IdentityCheck
from asymptotic_cyclic.cocyclic.module import BasisCocyclicModule
from asymptotic_cyclic.cocyclic.operators import connes_B, hochschild_b

logger = logging.getLogger(__name__)

Direction = Literal["b", "B"]
Side = Literal["below", "above"]


class PresentationDocument(BaseModel):
    """有限表示の JSON 形式（行列は "p/q" 文字列の入れ子配列、キーは写像の始点次数）"""

    dims: dict[int, int]
    b: dict[int, list[list[str]]] = {}
    B: dict[int, list[list[str]]] = {}
    truncated_top: bool = False

    model_config = {"extra": "forbid"}


@dataclass(frozen=True)
class MixedComplexPresentation:
    """次数ごとの次元と、b_n: X_n → X_{n+1}, B_n: X_n → X_{n−1} の有理数行列

    行列は (終点の次元) × (始点の次元)。登録の無い写像は零写像。
    truncated_top が真なら最上位次数の b は表示の外に出ており、そこに触れる恒等式と Betti 数は参考値になる。
    """

    dims: Mapping[int, int]
    b: Mapping[int, FractionMatrix] = field(default_factory=dict)
    B: Mapping[int, FractionMatrix] = field(default_factory=dict)
    truncated_top: bool = False

    def __post_init__(self) -> None:
        for name, maps, shift in (("b", self.b, 1), ("B", self.B, -1)):
            for n, matrix in maps.items():
                expected = (self.dim(n + shift), self.dim(n))
                if matrix.shape != expected:
                    msg = f"{name}_{n} has shape {matrix.shape}, expected {expected}"
                    raise PresentationError(msg)

    @property
    def degrees(self) -> list[int]:
        """次元が正の次数"""
        return sorted(n for n, d in self.dims.items() if d > 0)

    @property
    def top(self) -> int:
        """表示されている最大次数"""
        return max(self.dims, default=0)

    def dim(self, n: int) -> int:
        """X_n の次元"""
        return self.dims.get(n, 0)

    def b_matrix(self, n: int) -> FractionMatrix:
        """b_n（未登録なら零行列）"""
        return self.b[n] if n in self.b else zeros(self.dim(n + 1), self.dim(n))

    def B_matrix(self, n: int) -> FractionMatrix:
        """B_n（未登録なら零行列）"""
        return self.B[n] if n in self.B else zeros(self.dim(n - 1), self.dim(n))

    def verify(self) -> list[IdentityCheck]:
        """b∘b = 0, B∘B = 0, bB + Bb = 0 を厳密に検査する"""
        checks = []
        limit = self.top - 1 if self.truncated_top else self.top
        for n in sorted(self.dims):
            composites = [("b b = 0", n + 1 <= limit, lambda n=n: matmul(self.b_matrix(n + 1), self.b_matrix(n)))]
            composites.append(("B B = 0", True, lambda n=n: matmul(self.B_matrix(n - 1), self.B_matrix(n))))
            composites.append(("b B + B b = 0", n <= limit, lambda n=n: matmul(self.b_matrix(n - 1), self.B_matrix(n)) + matmul(self.B_matrix(n + 1), self.b_matrix(n))))
            for name, applicable, composite in composites:
                if not applicable:
                    continue
                value = composite()
                passed = is_zero(value)
                checks.append(IdentityCheck(name=name, degree=n, passed=passed, evaluations=1, witness=None if passed else str(value.tolist())))
        return checks

    def betti(self, m: int, direction: Direction = "b") -> int:
        """H_m の次元

        b 方向は dim ker b_m − rank b_{m−1}、B 方向は dim ker B_m − rank B_{m+1}。
        """
        if direction == "b":
            outgoing, incoming = self.b_matrix(m), self.b_matrix(m - 1)
        elif direction == "B":
            outgoing, incoming = self.B_matrix(m), self.B_matrix(m + 1)
        else:
            msg = f"unknown direction: {direction}"
            raise ValueError(msg)
        kernel = self.dim(m) - rank(outgoing)
        return kernel - rank(incoming)

    def good_truncation(self, n: int, side: Side) -> MixedComplexPresentation:
        """次数 n での良い切断

        below は X_{*≤n}（次数 n を ker b_n に置き換える）、above は X_{*>n}（次数 n を im b_n ≅ X_n/ker b_n に
        置き換える）。2つの次数 n の次元の和は dim X_n。
        """
        if n not in self.dims:
            msg = f"degree {n} is not presented (degrees {sorted(self.dims)})"
            raise PresentationError(msg)
        if side == "below":
            return self._truncate_below(n)
        if side == "above":
            return self._truncate_above(n)
        msg = f"unknown side: {side}"
        raise ValueError(msg)

    def _truncate_below(self, n: int) -> MixedComplexPresentation:
        if n >= self.top:
            return self
        kernel = nullspace(self.b_matrix(n))
        dims = {k: d for k, d in self.dims.items() if k < n}
        dims[n] = kernel.shape[1]
        b = {k: m for k, m in self.b.items() if k < n - 1}
        if n - 1 in self.dims:
            coords = solve(kernel, self.b_matrix(n - 1))
            if coords is None:
                msg = f"b_{n - 1} does not land in ker b_{n}"
                raise PresentationError(msg)
            b[n - 1] = coords
        B = {k: m for k, m in self.B.items() if k < n}
        B[n] = matmul(self.B_matrix(n), kernel)
        logger.debug("good truncation below %d: dim %d -> %d", n, self.dim(n), dims[n])
        return MixedComplexPresentation(dims, b, B)

    def _truncate_above(self, n: int) -> MixedComplexPresentation:
        image = column_basis(self.b_matrix(n))
        dims = {k: d for k, d in self.dims.items() if k > n}
        dims[n] = image.shape[1]
        b = {k: m for k, m in self.b.items() if k > n}
        b[n] = image
        B = {k: m for k, m in self.B.items() if k > n + 1}
        if n + 1 in self.dims:
            target = matmul(self.b_matrix(n), self.B_matrix(n + 1))
            coords = solve(image, target)
            if coords is None:
                msg = f"b_{n} B_{n + 1} does not land in im b_{n}"
                raise PresentationError(msg)
            B[n + 1] = coords
        logger.debug("good truncation above %d: dim %d -> %d", n, self.dim(n), dims[n])
        return MixedComplexPresentation(dims, b, B, truncated_top=self.truncated_top)

    def to_document(self) -> PresentationDocument:
        """JSON 形式のモデル"""

        def encode(matrix: FractionMatrix) -> list[list[str]]:
            return [[str(Fraction(v)) for v in row] for row in matrix.tolist()]

        return PresentationDocument(
            dims=dict(self.dims),
            b={n: encode(m) for n, m in sorted(self.b.items())},
            B={n: encode(m) for n, m in sorted(self.B.items())},
            truncated_top=self.truncated_top,
        )

    def to_json(self) -> str:
        """JSON 文字列"""
        return self.to_document().model_dump_json(indent=2)

    @classmethod
    def from_document(cls, doc: PresentationDocument) -> MixedComplexPresentation:
        """JSON 形式のモデルから作る"""
        dims = dict(doc.dims)
        b = {n: fraction_matrix(rows, (dims.get(n + 1, 0), dims.get(n, 0))) for n, rows in doc.b.items()}
        B = {n: fraction_matrix(rows, (dims.get(n - 1, 0), dims.get(n, 0))) for n, rows in doc.B.items()}
        return cls(dims, b, B, truncated_top=doc.truncated_top)

    @classmethod
    def from_json(cls, text: str) -> MixedComplexPresentation:
        """JSON 文字列から作る

        Raises:
            ValidationError: 形式が不正な場合
            PresentationError: 行列の形が次元と合わない場合
        """
        return cls.from_document(PresentationDocument.model_validate_json(text))


def presentation_from_basis[K: Hashable](module: BasisCocyclicModule[K], bases: Mapping[int, Sequence[K]]) -> MixedComplexPresentation:
    """構造写像で閉じた有限個の基底元から混合複体の表示を作る

    最上位次数からの b は表示の外に出るので登録せず、truncated_top を立てる。

    Raises:
        PresentationError: 像が与えた基底の外に出る場合
    """
    top = max(bases)
    index = {n: {key: k for k, key in enumerate(keys)} for n, keys in bases.items()}

    def matrix(source: int, target: int, operator: str) -> FractionMatrix:
        out = zeros(len(bases[target]), len(bases[source]))
        for col, key in enumerate(bases[source]):
            x = LinearCombination.basis(key, Fraction(1))
            image = hochschild_b(module, source, x) if operator == "b" else connes_B(module, source, x)
            for image_key, coeff in image.items():
                if image_key not in index[target]:
                    msg = f"{operator}_{source} maps {key!r} outside the given basis of degree {target} ({image_key!r})"
                    raise PresentationError(msg)
                out[index[target][image_key], col] = Fraction(coeff)
        return out

    b = {n: matrix(n, n + 1, "b") for n in bases if n + 1 in bases}
    B = {n: matrix(n, n - 1, "B") for n in bases if n - 1 in bases}
    presentation = MixedComplexPresentation({n: len(keys) for n, keys in bases.items()}, b, B, truncated_top=True)
    logger.info("%s: presentation through degree %d with dims %s", module.name, top, dict(presentation.dims))
    return presentation



def presentation_from_module(module: AlgebraCocyclicModule, max_degree: int) -> MixedComplexPresentation:
    """有限次元代数の余巡回加群の、次数 max_degree までの表示

    次数 n の基底は双対基底 e^{i₀}⊗…⊗e^{iₙ}（np.ndindex の順）。最上位次数の b は登録しない。

    Raises:
        PresentationError: 浮動小数の加群が渡された場合
        ValueError: max_degree が負の場合
    """
    if not module.exact:
        msg = f"{module.name}: exact presentations need an exact (Fraction) module"
        raise PresentationError(msg)
    if max_degree < 0:
        msg = f"max_degree must be >= 0, got {max_degree}"
        raise ValueError(msg)
    k = module.dimension

    def matrix(source: int, target: int, operator: str) -> FractionMatrix:
        out = zeros(k ** (target + 1), k ** (source + 1))
        for col, idx in enumerate(np.ndindex(*(k,) * (source + 1))):
            x = module.zero(source)
            x[idx] = Fraction(1)
            image = hochschild_b(module, source, x) if operator == "b" else connes_B(module, source, x)
            out[:, col] = image.reshape(-1)
        return out

    dims = {n: k ** (n + 1) for n in range(max_degree + 1)}
    b = {n: matrix(n, n + 1, "b") for n in range(max_degree)}
    B = {n: matrix(n, n - 1, "B") for n in range(1, max_degree + 1)}
    presentation = MixedComplexPresentation(dims, b, B, truncated_top=True)
    logger.info("%s: presentation through degree %d with dims %s", module.name, max_degree, dims)
    return presentation
