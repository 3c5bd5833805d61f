"""サブコマンドの実装（各コマンドは終了コードとレポートを返す）"""

import json
import logging
from collections.abc import Callable
from pathlib import Path
from typing import Any

from asymptotic_cyclic.charmaps import HopfPolynomialModule, general_even_index_evaluation, hopf_simplex_diagonal
from asymptotic_cyclic.cli.exceptions import InputSpecError
from asymptotic_cyclic.cli.models import (
    CommandName,
    CommandReport,
    EvenIndexCommandReport,
    GrowthReport,
    IdentitiesReport,
    JloReport,
    RunConfig,
    SpectralFlowReport,
    VerifySimplexReport,
)
from asymptotic_cyclic.cocyclic import CocyclicModule, CorruptedCyclicModule, check_identities, diagonal_algebra, dual_numbers, matrix_algebra_m2, mixed_complex_checks, norm_estimate_check
from asymptotic_cyclic.fredholm import (
    BUNDLED_MODULES,
    EvenFredholmModule,
    OddFredholmModule,
    boundedness_constant,
    bundled_module,
    chern_norm_profile,
    eta_evaluator,
    even_index_cochain_pairing,
    jlo_chern_evaluator,
    load_module_spec,
    mckean_singer_index,
    odd_index_constant,
    pair_even_K0,
    pair_odd_K1,
    perturbation_stability,
    spectral_flow_sweep,
)
from asymptotic_cyclic.fredholm.module import FredholmObject
from asymptotic_cyclic.growth import GrowthSequence, Relation, classify_sequence
from asymptotic_cyclic.simplex import SimplexModule, classify_cocycle_growth, corrupted_cocycle, odd_image_identities, universal_cocycle, verify_cocycle_window
from asymptotic_cyclic.simplex.cocycle import MIN_GROWTH_PREFIX

logger = logging.getLogger(__name__)

EXIT_PASSED = 0
EXIT_FAILED = 1
EXIT_HYPOTHESIS = 2
EXIT_INPUT = 3

DEFAULT_JLO_TERMS = 3
DEFAULT_EVEN_INDEX_TERMS = 8
DEFAULT_ODD_TERMS = 3
DEFAULT_IDENTITY_DEGREE = 3
STABILITY_EPS = 1e-3
MUTATED_DEGREE = 1

IDENTITY_MODULES: dict[str, Callable[[], CocyclicModule[Any]]] = {
    "simplex": SimplexModule,
    "hopf": HopfPolynomialModule,
    "diag": hopf_simplex_diagonal,
    "diagonal-c2": lambda: diagonal_algebra(2),
    "dual-numbers": dual_numbers,
    "m2": matrix_algebra_m2,
}

CommandResult = tuple[int, CommandReport]


def _exit_code(passed: bool) -> int:
    return EXIT_PASSED if passed else EXIT_FAILED


def load_fredholm(spec: str | None) -> FredholmObject:
    """同梱の加群名、または JSON ファイルのパスから加群を読み込む

    Raises:
        InputSpecError: --spec が無い場合
        FileNotFoundError: ファイルが存在しない場合
        ModuleSpecError: 仕様が不正な場合
    """
    if spec is None:
        msg = "--spec is required (a bundled module name or a JSON file)"
        raise InputSpecError(msg)
    if spec in BUNDLED_MODULES:
        return bundled_module(spec)
    return load_module_spec(Path(spec))


def _even_module(run: RunConfig) -> EvenFredholmModule:
    module = load_fredholm(run.spec)
    if not isinstance(module, EvenFredholmModule):
        msg = f"{run.command} needs an even module, got {type(module).__name__} from {run.spec}"
        raise InputSpecError(msg)
    return module


def cmd_verify_simplex(run: RunConfig) -> CommandResult:
    """普遍コサイクルの閉性、ノルム成長、単体の余巡回恒等式をまとめて検証する"""
    window = run.max_even_degree // 2
    component = corrupted_cocycle() if run.mutate else universal_cocycle
    if run.mutate:
        logger.info("verify-simplex: phi_2 is corrupted, the suite is expected to fail")

    window_report = verify_cocycle_window(window, component)
    growth = classify_cocycle_growth(run.terms_or(MIN_GROWTH_PREFIX), run.config.growth)
    odd_images = odd_image_identities(window)
    simplex = SimplexModule()
    identities = check_identities(simplex, run.max_even_degree, seed=run.seed)
    mixed = mixed_complex_checks(simplex, run.max_even_degree, seed=run.seed)

    passed = window_report.passed and growth.passed and all(e.passed for e in odd_images) and identities.passed and mixed.passed
    report = VerifySimplexReport(
        mutated=run.mutate,
        window=window_report,
        growth=growth,
        odd_images=odd_images,
        identities=identities,
        mixed_complex=mixed,
        passed=passed,
    )
    return _exit_code(passed), report


def _read_growth_spec(path: str | None) -> dict[str, Any]:
    if path is None:
        msg = "--spec is required (a JSON file with x and y profiles)"
        raise InputSpecError(msg)
    data = json.loads(Path(path).read_text(encoding="utf-8"))
    if not isinstance(data, dict) or "x" not in data or "y" not in data:
        msg = f"{path}: expected an object with 'x' and 'y' profiles"
        raise InputSpecError(msg)
    return data


def cmd_growth_classify(run: RunConfig) -> CommandResult:
    """2つの数列 (x_n), (y_n) の ≺ 関係を有限区間で判定する

    入力 JSON は {"x": プロファイル, "y": プロファイル, "radii"?: [...], "expect"?: 関係}。
    expect があれば判定と一致しない場合に失敗とする。
    """
    data = _read_growth_spec(run.spec)
    try:
        x = GrowthSequence.from_profile(data["x"])
        y = GrowthSequence.from_profile(data["y"])
    except KeyError as e:
        msg = f"{run.spec}: profile is missing {e}"
        raise InputSpecError(msg) from e

    prefix_length = run.terms_or(min(x.max_index, y.max_index))
    radii = run.radii if run.radii is not None else data.get("radii", run.probe_radii())
    classification = classify_sequence(x, y, radii, prefix_length, run.config.growth)
    expected = Relation(data["expect"]) if "expect" in data else None
    passed = expected is None or classification.verdict.relation == expected
    logger.info("growth-classify: %s vs %s is %s", x.label, y.label, classification.verdict.relation)
    return _exit_code(passed), GrowthReport(prefix_length=prefix_length, classification=classification, expected=expected, passed=passed)


def cmd_jlo(run: RunConfig) -> CommandResult:
    """JLO Chern 指標と p のペアリングを McKean–Singer 指数と比べ、ノルムの上界も確かめる"""
    fm = _even_module(run)
    p = fm.element(run.idempotent)
    settings = run.config.fredholm
    n_max = run.terms_or(DEFAULT_JLO_TERMS)

    index = mckean_singer_index(fm, p, settings)
    evaluator = jlo_chern_evaluator(fm, run.method, run.config.quadrature, settings)
    pairing = pair_even_K0(fm, evaluator, p, n_max, settings)
    gap = abs(pairing.complex_total - index.index)
    profile = chern_norm_profile(fm, seed=run.seed, growth=run.config.growth)
    stability = perturbation_stability(fm, p, STABILITY_EPS, n_max=min(n_max, 2), seed=run.seed, settings=settings)

    passed = gap <= run.tol and profile.passed
    logger.info("jlo: %s pairing %s vs index %d (gap %.3g)", fm.name, pairing.complex_total, index.index, gap)
    report = JloReport(
        module=fm.name,
        idempotent=run.idempotent,
        method=run.method,
        boundedness_constant=boundedness_constant(fm),
        mckean_singer=index,
        pairing=pairing,
        pairing_gap=gap,
        chern_profile=profile,
        stability=stability,
        passed=passed,
    )
    return _exit_code(passed), report


def cmd_even_index(run: RunConfig) -> CommandResult:
    """偶指数コチェインのペアリングを項ごとに並べ、一般評価も並記する"""
    fm = _even_module(run)
    p = fm.element(run.idempotent)
    n_max = run.terms_or(DEFAULT_EVEN_INDEX_TERMS)

    index = even_index_cochain_pairing(fm, p, n_max, run.config.fredholm)
    general = general_even_index_evaluation(fm, p, n_max)
    if general.max_relative_gap > run.tol:
        logger.info("even-index: general and collapsed evaluations differ (max relative gap %.3g)", general.max_relative_gap)
    report = EvenIndexCommandReport(module=fm.name, idempotent=run.idempotent, index=index, general=general, passed=index.passed)
    return _exit_code(index.passed), report


def cmd_spectral_flow(run: RunConfig) -> CommandResult:
    """通過数とスケールごとの積分値を比べ、奇加群ならペアリングと定数も並べる"""
    source = load_fredholm(run.spec)
    if isinstance(source, EvenFredholmModule):
        msg = f"spectral-flow needs an odd module or a path, got an even module from {run.spec}"
        raise InputSpecError(msg)

    sweep = spectral_flow_sweep(source, settings=run.config.fredholm)
    final_gap = sweep.entries[-1].gap if sweep.entries else 0.0
    pairing = None
    constant = None
    if isinstance(source, OddFredholmModule):
        n_max = run.terms_or(DEFAULT_ODD_TERMS)
        pairing = pair_odd_K1(source, eta_evaluator(source, n_max), source.unitary, n_max)
        constant = odd_index_constant(max(n_max, 1))

    passed = final_gap <= run.tol
    logger.info("spectral-flow: %s has flow %d, final gap %.3g", source.name, sweep.crossings.flow, final_gap)
    report = SpectralFlowReport(module=source.name, sweep=sweep, final_gap=final_gap, pairing=pairing, constant=constant, passed=passed)
    return _exit_code(passed), report


def cmd_identities(run: RunConfig) -> CommandResult:
    """余巡回恒等式と混合複体の恒等式を検査する（simplex ではノルム評価も）"""
    if run.module not in IDENTITY_MODULES:
        msg = f"unknown module: {run.module} (choose from {', '.join(IDENTITY_MODULES)})"
        raise InputSpecError(msg)
    base = IDENTITY_MODULES[run.module]()
    module = CorruptedCyclicModule(base, MUTATED_DEGREE) if run.mutate else base
    max_degree = run.terms_or(DEFAULT_IDENTITY_DEGREE)

    identities = check_identities(module, max_degree, seed=run.seed)
    mixed = mixed_complex_checks(module, max_degree, seed=run.seed)
    # 構造写像が点を点に写す加群でだけ評価する
    norms = norm_estimate_check(module, max_degree, seed=run.seed) if run.module == "simplex" else None

    passed = identities.passed and mixed.passed and (norms is None or norms.passed)
    for failure in identities.failures():
        logger.info("identities: %s failed in degree %d", failure.name, failure.degree)
    report = IdentitiesReport(module=module.name, mutated=run.mutate, seed=run.seed, identities=identities, mixed_complex=mixed, norms=norms, passed=passed)
    return _exit_code(passed), report


COMMANDS: dict[CommandName, Callable[[RunConfig], CommandResult]] = {
    "verify-simplex": cmd_verify_simplex,
    "growth-classify": cmd_growth_classify,
    "jlo": cmd_jlo,
    "even-index": cmd_even_index,
    "spectral-flow": cmd_spectral_flow,
    "identities": cmd_identities,
}
