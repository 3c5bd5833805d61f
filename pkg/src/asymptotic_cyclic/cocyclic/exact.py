"""有理数行列の行階段形と、そこから得る階数・核・像・解"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

FractionMatrix = np.ndarray


def fraction_matrix(rows: Sequence[Sequence[Fraction | int | str]] | np.ndarray, shape: tuple[int, int] | None = None) -> FractionMatrix:
    """Fraction を要素とする object 配列に変換する（"p/q" 文字列も受け付ける）"""
    if shape is not None and shape[0] * shape[1] == 0:
        return np.empty(shape, dtype=object)
    out = np.array([[Fraction(v) for v in row] for row in rows], dtype=object)
    if out.size == 0:
        return np.empty(shape or (len(rows), 0), dtype=object)
    return out


def zeros(rows: int, cols: int) -> FractionMatrix:
    """零行列"""
    out = np.empty((rows, cols), dtype=object)
    out.fill(Fraction(0))
    return out


def identity(size: int) -> FractionMatrix:
    """単位行列"""
    out = zeros(size, size)
    for k in range(size):
        out[k, k] = Fraction(1)
    return out


def matmul(a: FractionMatrix, b: FractionMatrix) -> FractionMatrix:
    """厳密な行列積（空行列も扱う）"""
    if a.shape[1] != b.shape[0]:
        msg = f"cannot compose {a.shape} with {b.shape}"
        raise ValueError(msg)
    if a.shape[1] == 0:
        return zeros(a.shape[0], b.shape[1])
    return np.dot(a, b)


def is_zero(a: FractionMatrix) -> bool:
    """全要素が0か"""
    return all(v == 0 for v in a.flat)


@dataclass(frozen=True)
class RowEchelon:
    """行階段形と軸列・自由列"""

    matrix: FractionMatrix
    pivots: tuple[int, ...]
    free: tuple[int, ...]

    @property
    def rank(self) -> int:
        """階数"""
        return len(self.pivots)


def row_echelon(m: FractionMatrix, rhs: FractionMatrix | None = None) -> tuple[RowEchelon, FractionMatrix | None]:
    """前進消去で行階段形を作る（rhs があれば同じ行操作を適用する）"""
    a = np.array(m, dtype=object, copy=True)
    t = None if rhs is None else np.array(rhs, dtype=object, copy=True)
    n_rows, n_cols = a.shape
    pivots: list[int] = []
    free: list[int] = []
    piv_r = 0
    for piv_c in range(n_cols):
        i_row = next((r for r in range(piv_r, n_rows) if a[r, piv_c] != 0), None)
        if i_row is None:
            free.append(piv_c)
            continue
        if i_row != piv_r:
            a[[piv_r, i_row]] = a[[i_row, piv_r]]
            if t is not None:
                t[[piv_r, i_row]] = t[[i_row, piv_r]]
        fp = a[piv_r, piv_c]
        for r in range(piv_r + 1, n_rows):
            fr = a[r, piv_c]
            if fr == 0:
                continue
            frp = fr / fp
            a[r, piv_c:] = a[r, piv_c:] - a[piv_r, piv_c:] * frp
            if t is not None:
                t[r] = t[r] - t[piv_r] * frp
        pivots.append(piv_c)
        piv_r += 1
    return RowEchelon(a, tuple(pivots), tuple(free)), t


def rank(m: FractionMatrix) -> int:
    """厳密な階数"""
    if m.size == 0:
        return 0
    return row_echelon(m)[0].rank


def _back_substitute(echelon: RowEchelon, t: np.ndarray | None, free_values: dict[int, Fraction]) -> np.ndarray:
    a = echelon.matrix
    n_cols = a.shape[1]
    sol = np.empty(n_cols, dtype=object)
    sol.fill(Fraction(0))
    for c, v in free_values.items():
        sol[c] = v
    for r in range(len(echelon.pivots) - 1, -1, -1):
        piv_c = echelon.pivots[r]
        s = Fraction(0) if t is None else -t[r]
        for c in range(piv_c + 1, n_cols):
            s += a[r, c] * sol[c]
        sol[piv_c] = -s / a[r, piv_c]
    return sol


def nullspace(m: FractionMatrix) -> FractionMatrix:
    """核の基底を列に並べた行列（自由変数ごとに1列）"""
    n_cols = m.shape[1]
    if m.shape[0] == 0:
        return identity(n_cols)
    echelon, _ = row_echelon(m)
    columns = [_back_substitute(echelon, None, {c: Fraction(int(c == f)) for c in echelon.free}) for f in echelon.free]
    if not columns:
        return zeros(n_cols, 0)
    return np.stack(columns, axis=1)


def column_basis(m: FractionMatrix) -> FractionMatrix:
    """像の基底（元の行列の軸列）"""
    if m.size == 0:
        return zeros(m.shape[0], 0)
    echelon, _ = row_echelon(m)
    if not echelon.pivots:
        return zeros(m.shape[0], 0)
    return m[:, list(echelon.pivots)]


def solve(m: FractionMatrix, rhs: FractionMatrix) -> FractionMatrix | None:
    """m x = rhs の解の1つ（自由変数は0、解が無ければ None）

    rhs は1列でも複数列でもよい。
    """
    columns = rhs[:, None] if rhs.ndim == 1 else rhs
    solutions = []
    for k in range(columns.shape[1]):
        echelon, t = row_echelon(m, columns[:, k])
        assert t is not None
        if any(t[r] != 0 for r in range(echelon.rank, m.shape[0])):
            return None
        solutions.append(_back_substitute(echelon, t, {}))
    if not solutions:
        return zeros(m.shape[1], 0)
    out = np.stack(solutions, axis=1)
    return out[:, 0] if rhs.ndim == 1 else out
