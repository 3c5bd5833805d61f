import json
import logging
import sys
from collections.abc import Sequence

from asymptotic_cyclic.cli import COMMANDS, EXIT_FAILED, EXIT_HYPOTHESIS, EXIT_INPUT, CliError, build_parser, run_config_from_args, write_report
from asymptotic_cyclic.config import load_config, load_env_config
from asymptotic_cyclic.fredholm import FredholmError, HypothesisError, QuadratureError
from asymptotic_cyclic.growth import GrowthError

logger = logging.getLogger(__name__)


def setup_logging(level: str) -> None:
    """ログを標準エラーに出す（レポートは標準出力）"""
    logging.basicConfig(
        level=level,
        format="%(asctime)s %(levelname)s %(name)s %(message)s",
        datefmt="%Y-%m-%d %H:%M:%S",
        stream=sys.stderr,
    )


def main(argv: Sequence[str] | None = None) -> int:
    """アプリケーションのエントリーポイント

    Returns:
        int: 0 成功、1 検証失敗、2 定理の仮定が満たされない、3 入出力または入力形式のエラー
    """
    try:
        args = build_parser().parse_args(argv)
        setup_logging(load_env_config().log_level)
        config = load_config(args.config_path)
        logger.info("Config loaded: path=%s, seed=%d", config.config_path, config.seed)
        run = run_config_from_args(args, config)
        code, report = COMMANDS[run.command](run)
        write_report(report, run.emit)
    except HypothesisError as e:
        logger.error("Hypothesis not satisfied (%s, defect %.3g): %s", e.name, e.defect, e)
        return EXIT_HYPOTHESIS
    except QuadratureError as e:
        logger.error("Quadrature did not converge: %s", e)
        return EXIT_FAILED
    except (CliError, FredholmError, GrowthError, OSError, ValueError) as e:
        # ValidationError と JSONDecodeError は ValueError の派生
        kind = "Invalid JSON" if isinstance(e, json.JSONDecodeError) else type(e).__name__
        logger.error("%s: %s", kind, e)
        return EXIT_INPUT
    logger.info("%s finished with exit code %d", run.command, code)
    return code


if __name__ == "__main__":
    sys.exit(main())
