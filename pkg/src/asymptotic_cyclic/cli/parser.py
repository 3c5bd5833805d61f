"""コマンドライン引数の解析"""

import argparse
from pathlib import Path
from typing import NoReturn

from asymptotic_cyclic.cli.exceptions import CliError
from asymptotic_cyclic.cli.models import RunConfig
from asymptotic_cyclic.config import Config


class UsageError(CliError):
    """引数が不正な場合のエラー"""


class _Parser(argparse.ArgumentParser):
    """引数エラーで終了せず UsageError を送出するパーサ"""

    def error(self, message: str) -> NoReturn:
        raise UsageError(message)


def build_parser() -> _Parser:
    """サブコマンド付きのパーサを作る"""
    shared = _Parser(add_help=False)
    shared.add_argument("--emit", type=Path, help="レポートの書き出し先（既定は標準出力）")
    shared.add_argument("--terms", type=int, help="打ち切り N")
    shared.add_argument("--tol", type=float, help="数値比較の許容誤差")
    shared.add_argument("--seed", type=int, help="乱択スイートの乱数シード（既定は設定ファイルの値）")
    shared.add_argument("--method", choices=["exact", "quadrature", "block"], help="JLO 括弧の評価方法")
    shared.add_argument("--radii", type=float, nargs="+", help="≺ 判定で試す半径")
    shared.add_argument("--config", dest="config_path", type=Path, help="設定ファイルのパス")

    parser = _Parser(prog="asymptotic-cyclic", description="漸近的巡回コホモロジーと指数コサイクルの検証ツール")
    commands = parser.add_subparsers(dest="command", required=True)

    verify = commands.add_parser("verify-simplex", parents=[shared], help="普遍指数コサイクルを厳密に検証する")
    verify.add_argument("--max-even-degree", type=int, help="検証する最大の偶数次 2N")
    verify.add_argument("--mutate", action="store_true", help="φ₂ を改変して失敗を確かめる")

    growth = commands.add_parser("growth-classify", parents=[shared], help="2つの数列の ≺ 関係を判定する")
    growth.add_argument("--spec", required=True, help="x, y のプロファイルを持つ JSON")

    for name, text in [("jlo", "JLO Chern 指標とのペアリング"), ("even-index", "偶指数コサイクルとのペアリング")]:
        even = commands.add_parser(name, parents=[shared], help=text)
        even.add_argument("--spec", required=True, help="同梱の加群名、または加群の JSON")
        even.add_argument("--idempotent", help="代数の元の名前（既定は p）")

    flow = commands.add_parser("spectral-flow", parents=[shared], help="スペクトルフローと奇指数のペアリング")
    flow.add_argument("--spec", required=True, help="同梱の加群名、または奇加群か道の JSON")

    identities = commands.add_parser("identities", parents=[shared], help="余巡回恒等式を検査する")
    identities.add_argument("--module", help="simplex, hopf, diag, diagonal-c2, dual-numbers, m2")
    identities.add_argument("--mutate", action="store_true", help="t₁ を2倍した加群で失敗を確かめる")
    return parser


def run_config_from_args(args: argparse.Namespace, config: Config) -> RunConfig:
    """解析済みの引数と設定から RunConfig を作る（未指定の引数は既定値）"""
    fields = {key: value for key, value in vars(args).items() if value is not None and key != "config_path"}
    fields.setdefault("seed", config.seed)
    return RunConfig(**fields, config=config)
