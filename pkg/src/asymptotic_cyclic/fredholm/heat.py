"""熱核 e(t) = e^{−tD²} と（超）トレース"""

from __future__ import annotations

import threading
from collections.abc import Iterator, MutableMapping
from dataclasses import dataclass
from fractions import Fraction
from typing import TYPE_CHECKING

import numpy as np

from asymptotic_cyclic.fredholm.exceptions import DimensionMismatchError, HypothesisError

if TYPE_CHECKING:
    from asymptotic_cyclic.fredholm.module import EvenFredholmModule, OddFredholmModule

SELF_ADJOINT_TOLERANCE = 1e-12


def commutator(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """[x, y] = xy − yx"""
    return x @ y - y @ x


def operator_norm(a: np.ndarray) -> float:
    """作用素ノルム（最大特異値）"""
    if a.size == 0:
        return 0.0
    return float(np.linalg.norm(a, ord=2))


def check_square(a: np.ndarray, dim: int, label: str = "matrix") -> None:
    """a が dim × dim であることを確かめる

    Raises:
        DimensionMismatchError: 形が異なる場合
    """
    if a.shape != (dim, dim):
        msg = f"{label} of shape {a.shape} does not match dimension {dim}"
        raise DimensionMismatchError(msg, expected=(dim, dim), actual=a.shape)


def check_self_adjoint(a: np.ndarray, label: str = "D") -> None:
    """a = a† を確かめる

    Raises:
        HypothesisError: 自己共役でない場合
    """
    defect = float(np.max(np.abs(a - a.conj().T))) if a.size else 0.0
    if defect > SELF_ADJOINT_TOLERANCE:
        msg = f"{label} is not self-adjoint (max |{label} - {label}^*| = {defect:.3g})"
        raise HypothesisError(msg, name=f"{label} = {label}^*", defect=defect)


@dataclass(frozen=True, eq=False)
class Spectrum:
    """自己共役行列の固有分解 A = V diag(λ) V†"""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    @classmethod
    def of(cls, a: np.ndarray, label: str = "D") -> Spectrum:
        """自己共役行列 a の固有分解

        Raises:
            HypothesisError: a が自己共役でない場合
        """
        check_self_adjoint(a, label)
        values, vectors = np.linalg.eigh(a)
        return cls(eigenvalues=values, eigenvectors=vectors)

    @property
    def dim(self) -> int:
        """次元"""
        return len(self.eigenvalues)

    def to_eigenbasis(self, a: np.ndarray) -> np.ndarray:
        """V† a V"""
        return self.eigenvectors.conj().T @ a @ self.eigenvectors


def heat_kernel(spectrum: Spectrum, t: float) -> np.ndarray:
    """e^{−tA²}（t = 0 では厳密に単位行列）

    Raises:
        ValueError: t が負の場合
    """
    if t < 0:
        msg = f"heat time must be >= 0, got {t}"
        raise ValueError(msg)
    if t == 0:
        return np.eye(spectrum.dim, dtype=complex)
    v = spectrum.eigenvectors
    return (v * np.exp(-t * spectrum.eigenvalues**2)) @ v.conj().T


class HeatCache(MutableMapping[Fraction, np.ndarray]):
    """間隔の時刻ごとに熱核を保持するスレッド安全なキャッシュ"""

    def __init__(self) -> None:
        self._kernels: dict[Fraction, np.ndarray] = {}
        self._lock = threading.Lock()

    def __getitem__(self, key: Fraction) -> np.ndarray:
        with self._lock:
            return self._kernels[key]

    def __setitem__(self, key: Fraction, value: np.ndarray) -> None:
        with self._lock:
            self._kernels.setdefault(key, value)

    def __delitem__(self, key: Fraction) -> None:
        with self._lock:
            del self._kernels[key]

    def __iter__(self) -> Iterator[Fraction]:
        with self._lock:
            return iter(list(self._kernels))

    def __len__(self) -> int:
        with self._lock:
            return len(self._kernels)


def heat(fm: EvenFredholmModule | OddFredholmModule, t: float) -> np.ndarray:
    """e(t) = e^{−tD²}"""
    return fm.heat(t)


def supertrace(fm: EvenFredholmModule, a: np.ndarray) -> complex:
    """Str(a) = Tr(γa) = Tr(a|H⁺) − Tr(a|H⁻)"""
    return fm.supertrace(a)
