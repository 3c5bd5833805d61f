"""レポートの書き出し"""

import logging
import sys
from pathlib import Path

from pydantic import BaseModel

from asymptotic_cyclic.cli.exceptions import ReportWriteError

logger = logging.getLogger(__name__)


def write_report(report: BaseModel, path: Path | None = None) -> None:
    """レポートを JSON で書き出す（path が無ければ標準出力）

    同じ設定とシードからは同じバイト列になる。

    Raises:
        ReportWriteError: 書き出しに失敗した場合
    """
    text = report.model_dump_json(indent=2) + "\n"
    try:
        if path is None:
            sys.stdout.write(text)
        else:
            path.write_text(text, encoding="utf-8")
    except OSError as e:
        msg = f"Failed to write report to {path or 'stdout'}: {e}"
        raise ReportWriteError(msg, path) from e
    if path is not None:
        logger.info("Report written: %s", path)
