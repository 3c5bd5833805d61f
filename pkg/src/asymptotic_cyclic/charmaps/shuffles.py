"""(p,q)-シャッフルの列挙"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations


@dataclass(frozen=True)
class Shuffle:
    """(p,q)-シャッフル μ

    permutation[i] = μ(i+1)（1始まりの値）。μ(1) < … < μ(p) かつ μ(p+1) < … < μ(p+q)。
    """

    p: int
    q: int
    permutation: tuple[int, ...]
    sign: int

    def front(self) -> tuple[int, ...]:
        """μ(1), …, μ(p)"""
        return self.permutation[: self.p]

    def back(self) -> tuple[int, ...]:
        """μ(p+1), …, μ(p+q)"""
        return self.permutation[self.p :]


def shuffles(p: int, q: int) -> list[Shuffle]:
    """全ての (p,q)-シャッフルを符号付きで列挙する

    前半の値の位置集合の辞書順に並べる。符号は転倒数の偶奇。

    Raises:
        ValueError: p または q が負の場合
    """
    if p < 0 or q < 0:
        msg = f"p and q must be >= 0, got p={p}, q={q}"
        raise ValueError(msg)
    out = []
    values = range(1, p + q + 1)
    for front in combinations(values, p):
        chosen = set(front)
        back = tuple(v for v in values if v not in chosen)
        inversions = sum(v - (k + 1) for k, v in enumerate(front))
        out.append(Shuffle(p=p, q=q, permutation=front + back, sign=-1 if inversions % 2 else 1))
    return out
