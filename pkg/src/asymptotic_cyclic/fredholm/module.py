"""有限次元の偶・奇 Fredholm 加群と JSON 仕様"""

from __future__ import annotations

import logging
from collections.abc import Mapping
from dataclasses import dataclass, field
from functools import cached_property
from importlib import resources
from pathlib import Path
from typing import Literal

import numpy as np
from pydantic import BaseModel, Field

from asymptotic_cyclic.fredholm.exceptions import FredholmError, HypothesisError, ModuleSpecError
from asymptotic_cyclic.fredholm.heat import SELF_ADJOINT_TOLERANCE, Spectrum, check_self_adjoint, check_square, commutator, heat_kernel, operator_norm

logger = logging.getLogger(__name__)

BUNDLED_MODULES = ("index_one", "balanced", "commuting_projection", "conjugation_path", "generic_path", "commuting_unitary")


def _boundedness(dirac: np.ndarray, elements: list[np.ndarray]) -> float:
    ratios = []
    for a in elements:
        norm = operator_norm(a)
        if norm > 0:
            ratios.append((norm + operator_norm(commutator(dirac, a))) / norm)
    return max(ratios, default=1.0)


@dataclass(frozen=True, eq=False)
class EvenFredholmModule:
    """H = H⁺ ⊕ H⁻ 上の偶 Fredholm 加群

    γ は H⁺ で +1、H⁻ で −1 の対角行列。D は自己共役かつ γD + Dγ = 0、代数の元は γ と可換。
    epsilon は theta-summable の余裕で、有限次元では使わない。
    """

    dim_plus: int
    dim_minus: int
    dirac: np.ndarray
    algebra: Mapping[str, np.ndarray] = field(default_factory=dict)
    epsilon: float = 0.5
    name: str = "even-module"

    def __post_init__(self) -> None:
        if self.dim_plus < 0 or self.dim_minus < 0 or self.dim == 0:
            msg = f"dimensions must be >= 0 with a positive total, got {self.dim_plus}|{self.dim_minus}"
            raise ValueError(msg)
        check_square(self.dirac, self.dim, "D")
        check_self_adjoint(self.dirac)
        p = self.dim_plus
        parity_defect = max(float(np.max(np.abs(self.dirac[:p, :p]), initial=0.0)), float(np.max(np.abs(self.dirac[p:, p:]), initial=0.0)))
        if parity_defect > SELF_ADJOINT_TOLERANCE:
            msg = f"{self.name}: D is not odd for the grading (max even-block entry {parity_defect:.3g})"
            raise HypothesisError(msg, name="gamma D + D gamma = 0", defect=parity_defect)
        for label, a in self.algebra.items():
            check_square(a, self.dim, label)
            odd_defect = max(float(np.max(np.abs(a[:p, p:]), initial=0.0)), float(np.max(np.abs(a[p:, :p]), initial=0.0)))
            if odd_defect > SELF_ADJOINT_TOLERANCE:
                msg = f"{self.name}: algebra element '{label}' is not even"
                raise HypothesisError(msg, name=f"{label} even", defect=odd_defect)

    @property
    def dim(self) -> int:
        """全次元"""
        return self.dim_plus + self.dim_minus

    @cached_property
    def grading(self) -> np.ndarray:
        """γ = diag(1, …, 1, −1, …, −1)"""
        return np.diag(np.concatenate([np.ones(self.dim_plus), -np.ones(self.dim_minus)])).astype(complex)

    @cached_property
    def spectrum(self) -> Spectrum:
        """D の固有分解"""
        return Spectrum.of(self.dirac)

    @cached_property
    def boundedness_constant(self) -> float:
        """N(D) = max_a (‖a‖ + ‖[D,a]‖)/‖a‖"""
        return _boundedness(self.dirac, list(self.algebra.values()))

    def element(self, label: str) -> np.ndarray:
        """名前付きの代数の元

        Raises:
            ModuleSpecError: 名前が無い場合
        """
        if label not in self.algebra:
            msg = f"{self.name}: no algebra element named '{label}' (have {sorted(self.algebra)})"
            raise ModuleSpecError(msg)
        return self.algebra[label]

    def heat(self, t: float) -> np.ndarray:
        """e(t) = e^{−tD²}"""
        return heat_kernel(self.spectrum, t)

    def supertrace(self, a: np.ndarray) -> complex:
        """Str(a) = Tr(a|H⁺) − Tr(a|H⁻)"""
        check_square(a, self.dim)
        p = self.dim_plus
        return complex(np.trace(a[:p, :p]) - np.trace(a[p:, p:]))

    def trace(self, a: np.ndarray) -> complex:
        """Tr(a)"""
        check_square(a, self.dim)
        return complex(np.trace(a))


@dataclass(frozen=True, eq=False)
class OddFredholmModule:
    """奇 Fredholm 加群 (H, D) とユニタリ g"""

    dirac: np.ndarray
    unitary: np.ndarray
    algebra: Mapping[str, np.ndarray] = field(default_factory=dict)
    epsilon: float = 0.5
    name: str = "odd-module"

    def __post_init__(self) -> None:
        check_square(self.dirac, self.dim, "D")
        check_self_adjoint(self.dirac)
        check_square(self.unitary, self.dim, "g")
        defect = float(np.max(np.abs(self.unitary.conj().T @ self.unitary - np.eye(self.dim))))
        if defect > SELF_ADJOINT_TOLERANCE:
            msg = f"{self.name}: g is not unitary (max |g^*g - 1| = {defect:.3g})"
            raise HypothesisError(msg, name="g^* g = 1", defect=defect)
        for label, a in self.algebra.items():
            check_square(a, self.dim, label)

    @property
    def dim(self) -> int:
        """次元"""
        return self.dirac.shape[0]

    @property
    def unitary_inverse(self) -> np.ndarray:
        """g⁻¹ = g†"""
        return self.unitary.conj().T

    @cached_property
    def spectrum(self) -> Spectrum:
        """D の固有分解"""
        return Spectrum.of(self.dirac)

    @cached_property
    def derivation_constant(self) -> float:
        """c = max_a ‖[D,a]‖/‖a‖（g と代数の元について）"""
        ratios = [operator_norm(commutator(self.dirac, a)) / operator_norm(a) for a in [self.unitary, *self.algebra.values()] if operator_norm(a) > 0]
        return max(ratios, default=0.0)

    def heat(self, t: float) -> np.ndarray:
        """e(t) = e^{−tD²}"""
        return heat_kernel(self.spectrum, t)

    def trace(self, a: np.ndarray) -> complex:
        """Tr(a)"""
        check_square(a, self.dim)
        return complex(np.trace(a))

    def supertrace(self, a: np.ndarray) -> complex:
        """奇加群には次数付けが無い

        Raises:
            FredholmError: 常に
        """
        msg = f"{self.name}: odd modules carry no grading, use the trace"
        raise FredholmError(msg)


@dataclass(frozen=True, eq=False)
class LinearPath:
    """自己共役行列の線形な道 A_u = (1−u)A₀ + uA₁"""

    start: np.ndarray
    end: np.ndarray
    name: str = "path"

    def __post_init__(self) -> None:
        check_square(self.start, self.start.shape[0], "A0")
        check_square(self.end, self.start.shape[0], "A1")
        check_self_adjoint(self.start, "A0")
        check_self_adjoint(self.end, "A1")

    @property
    def dim(self) -> int:
        """次元"""
        return self.start.shape[0]

    @property
    def velocity(self) -> np.ndarray:
        """Ȧ = A₁ − A₀（u によらない）"""
        return self.end - self.start

    def at(self, u: float) -> np.ndarray:
        """A_u

        Raises:
            ValueError: u が [0, 1] の外の場合
        """
        if not 0.0 <= u <= 1.0:
            msg = f"path parameter must lie in [0, 1], got {u}"
            raise ValueError(msg)
        return (1.0 - u) * self.start + u * self.end

    def __call__(self, u: float) -> np.ndarray:
        return self.at(u)


def conjugation_path(om: OddFredholmModule) -> LinearPath:
    """D_u = (1−u)D + u g⁻¹Dg"""
    g_inv = om.unitary_inverse
    return LinearPath(start=om.dirac, end=g_inv @ om.dirac @ om.unitary, name=f"{om.name}:conjugation")


def dirac_path(om: OddFredholmModule, u: float) -> np.ndarray:
    """D_u = (1−u)D + u g⁻¹Dg"""
    return conjugation_path(om).at(u)


def velocity_defect(om: OddFredholmModule) -> float:
    """‖(g⁻¹Dg − D) − g⁻¹[D,g]‖（代数的には0）"""
    velocity = conjugation_path(om).velocity
    return operator_norm(velocity - om.unitary_inverse @ commutator(om.dirac, om.unitary))


ComplexEntry = tuple[float, float]
ComplexMatrix = list[list[ComplexEntry]]


class ModuleSpec(BaseModel):
    """加群の JSON 仕様（行列の成分は [re, im]）"""

    kind: Literal["even", "odd", "path"]
    name: str = Field(default="module", description="レポートに使う名前")
    dim_plus: int | None = Field(default=None, ge=0, description="偶加群の dim H⁺")
    dim_minus: int | None = Field(default=None, ge=0, description="偶加群の dim H⁻")
    D: ComplexMatrix = Field(..., description="Dirac 作用素（path では始点 A₀）")
    D_end: ComplexMatrix | None = Field(default=None, description="path の終点 A₁")
    g: ComplexMatrix | None = Field(default=None, description="奇加群のユニタリ")
    algebra: dict[str, ComplexMatrix] = Field(default_factory=dict, description="名前付きの代数の元")
    epsilon: float = Field(default=0.5, gt=0.0, description="theta-summable の余裕（有限次元では未使用）")

    model_config = {"extra": "forbid", "frozen": True}


def _matrix(entries: ComplexMatrix, label: str) -> np.ndarray:
    rows = {len(row) for row in entries}
    if not entries or len(rows) != 1 or rows.pop() != len(entries):
        msg = f"{label} must be a non-empty square matrix"
        raise ModuleSpecError(msg)
    return np.array([[complex(re, im) for re, im in row] for row in entries], dtype=complex)


FredholmObject = EvenFredholmModule | OddFredholmModule | LinearPath


def build_module(spec: ModuleSpec) -> FredholmObject:
    """仕様から加群（または道）を作る

    Raises:
        ModuleSpecError: 必須の項目が無い、または行列の形が不正な場合
        HypothesisError: 自己共役性などの構造条件が満たされない場合
    """
    dirac = _matrix(spec.D, "D")
    algebra = {label: _matrix(m, label) for label, m in spec.algebra.items()}
    try:
        if spec.kind == "even":
            if spec.dim_plus is None or spec.dim_minus is None:
                msg = f"{spec.name}: even modules need dim_plus and dim_minus"
                raise ModuleSpecError(msg)
            return EvenFredholmModule(spec.dim_plus, spec.dim_minus, dirac, algebra, spec.epsilon, spec.name)
        if spec.kind == "odd":
            if spec.g is None:
                msg = f"{spec.name}: odd modules need g"
                raise ModuleSpecError(msg)
            return OddFredholmModule(dirac, _matrix(spec.g, "g"), algebra, spec.epsilon, spec.name)
        if spec.D_end is None:
            msg = f"{spec.name}: paths need D_end"
            raise ModuleSpecError(msg)
        return LinearPath(dirac, _matrix(spec.D_end, "D_end"), spec.name)
    except ValueError as e:
        msg = f"{spec.name}: {e}"
        raise ModuleSpecError(msg) from e


def _load(spec: ModuleSpec) -> FredholmObject:
    module = build_module(spec)
    logger.info("Loaded %s module '%s'", spec.kind, spec.name)
    return module


def load_module_spec(source: Path | Mapping[str, object]) -> FredholmObject:
    """JSON ファイルまたは辞書から加群を読み込む

    Raises:
        FileNotFoundError: ファイルが存在しない場合
        ValidationError: JSON として読めない場合や仕様のスキーマに合わない場合
        ModuleSpecError: 仕様が加群として不正な場合
    """
    if isinstance(source, Path):
        return _load(ModuleSpec.model_validate_json(source.read_text(encoding="utf-8")))
    return _load(ModuleSpec.model_validate(dict(source)))


def bundled_module(name: str) -> FredholmObject:
    """パッケージ同梱の例を読み込む

    Raises:
        ModuleSpecError: 同梱されていない名前の場合
    """
    if name not in BUNDLED_MODULES:
        msg = f"unknown bundled module: {name} (choose from {', '.join(BUNDLED_MODULES)})"
        raise ModuleSpecError(msg)
    text = resources.files("asymptotic_cyclic").joinpath("data", f"{name}.json").read_text(encoding="utf-8")
    return _load(ModuleSpec.model_validate_json(text))
