"""コマンドの実行設定とレポートのモデル"""

from pathlib import Path
from typing import Literal

from pydantic import BaseModel, ConfigDict, Field

from asymptotic_cyclic.charmaps import GeneralEvenEvaluation
from asymptotic_cyclic.cocyclic import IdentityReport, NormReport
from asymptotic_cyclic.config import Config
from asymptotic_cyclic.fredholm import ChernProfile, EvenIndexReport, EvenPairing, McKeanSingerResult, OddIndexConstant, OddPairing, SpectralFlowSweep, StabilityReport
from asymptotic_cyclic.growth import GrowthClassification, Relation
from asymptotic_cyclic.simplex import CocycleGrowthReport, CocycleWindowReport, OddImageEntry

CommandName = Literal["verify-simplex", "growth-classify", "jlo", "even-index", "spectral-flow", "identities"]
Method = Literal["exact", "quadrature", "block"]

REPORT_CONFIG = ConfigDict(frozen=True, ser_json_inf_nan="strings")


class RunConfig(BaseModel):
    """1回のコマンド実行の設定（引数と Config から作る）"""

    command: CommandName
    spec: str | None = Field(default=None, description="入力 JSON のパス、または同梱の加群名")
    module: str = Field(default="simplex", description="identities で検査する加群")
    idempotent: str = Field(default="p", description="ペアリングに使う代数の元の名前")
    terms: int | None = Field(default=None, ge=0, description="打ち切り N（未指定ならコマンドごとの既定値）")
    max_even_degree: int = Field(default=16, ge=2, description="verify-simplex で検証する最大の偶数次")
    tol: float = Field(default=1e-6, gt=0.0, description="数値比較の許容誤差")
    seed: int = Field(default=0, ge=0, description="乱択スイートの乱数シード")
    method: Method = Field(default="exact", description="JLO 括弧の評価方法")
    radii: list[float] | None = Field(default=None, description="≺ 判定で試す半径（未指定なら設定値）")
    mutate: bool = Field(default=False, description="改変した構造で検査スイートが失敗することを確かめる")
    emit: Path | None = Field(default=None, description="レポートの書き出し先（未指定なら標準出力）")
    config: Config = Field(default_factory=Config)

    model_config = {"extra": "forbid", "frozen": True}

    def terms_or(self, default: int) -> int:
        """打ち切り N（未指定なら default）"""
        return default if self.terms is None else self.terms

    def probe_radii(self) -> list[float]:
        """≺ 判定で試す半径"""
        return self.config.growth.probe_radii if self.radii is None else self.radii


class VerifySimplexReport(BaseModel):
    """verify-simplex のレポート"""

    command: Literal["verify-simplex"] = "verify-simplex"
    mutated: bool
    window: CocycleWindowReport
    growth: CocycleGrowthReport
    odd_images: list[OddImageEntry]
    identities: IdentityReport
    mixed_complex: IdentityReport
    passed: bool

    model_config = REPORT_CONFIG


class GrowthReport(BaseModel):
    """growth-classify のレポート"""

    command: Literal["growth-classify"] = "growth-classify"
    prefix_length: int
    classification: GrowthClassification
    expected: Relation | None = None
    passed: bool

    model_config = REPORT_CONFIG


class JloReport(BaseModel):
    """jlo のレポート"""

    command: Literal["jlo"] = "jlo"
    module: str
    idempotent: str
    method: Method
    boundedness_constant: float
    mckean_singer: McKeanSingerResult
    pairing: EvenPairing
    pairing_gap: float = Field(..., description="|ペアリング − McKean–Singer 指数|")
    chern_profile: ChernProfile
    stability: StabilityReport
    passed: bool

    model_config = REPORT_CONFIG


class EvenIndexCommandReport(BaseModel):
    """even-index のレポート"""

    command: Literal["even-index"] = "even-index"
    module: str
    idempotent: str
    index: EvenIndexReport
    general: GeneralEvenEvaluation
    passed: bool

    model_config = REPORT_CONFIG


class SpectralFlowReport(BaseModel):
    """spectral-flow のレポート"""

    command: Literal["spectral-flow"] = "spectral-flow"
    module: str
    sweep: SpectralFlowSweep
    final_gap: float
    pairing: OddPairing | None = None
    constant: OddIndexConstant | None = None
    passed: bool

    model_config = REPORT_CONFIG


class IdentitiesReport(BaseModel):
    """identities のレポート"""

    command: Literal["identities"] = "identities"
    module: str
    mutated: bool
    seed: int
    identities: IdentityReport
    mixed_complex: IdentityReport
    norms: NormReport | None = None
    passed: bool

    model_config = REPORT_CONFIG


CommandReport = VerifySimplexReport | GrowthReport | JloReport | EvenIndexCommandReport | SpectralFlowReport | IdentitiesReport
