"""Fredholm 加群と JSON 仕様のテスト"""

import json
from pathlib import Path

import numpy as np
import pytest
from pydantic import ValidationError

from asymptotic_cyclic.fredholm import (
    BUNDLED_MODULES,
    EvenFredholmModule,
    FredholmError,
    HypothesisError,
    LinearPath,
    ModuleSpecError,
    OddFredholmModule,
    bundled_module,
    conjugation_path,
    dirac_path,
    load_module_spec,
    velocity_defect,
)

ONE = [1.0, 0.0]
ZERO = [0.0, 0.0]


class TestEvenFredholmModule:
    """EvenFredholmModuleのテスト"""

    def test_grading(self, index_one: EvenFredholmModule) -> None:
        """γ が H⁺ で +1、H⁻ で −1 であること"""
        assert np.array_equal(index_one.grading, np.diag([1.0, 1.0, -1.0]).astype(complex))
        assert index_one.dim == 3

    def test_boundedness_constant(self, index_one: EvenFredholmModule) -> None:
        """N(D) が (‖a‖ + ‖[D,a]‖)/‖a‖ の最大値であること"""
        # p = Id は1、q = diag(1,0,0) は ‖[D,q]‖ = 1 で2
        assert index_one.boundedness_constant == pytest.approx(2.0)

    def test_element(self, index_one: EvenFredholmModule) -> None:
        """名前付きの元を返し、無い名前は ModuleSpecError になること"""
        assert np.array_equal(index_one.element("p"), np.eye(3, dtype=complex))
        with pytest.raises(ModuleSpecError, match="no algebra element named 'r'"):
            index_one.element("r")

    def test_dirac_must_be_odd(self) -> None:
        """D が次数付けについて奇でないと HypothesisError になること"""
        with pytest.raises(HypothesisError, match="D is not odd") as exc_info:
            EvenFredholmModule(1, 1, np.diag([1.0, -1.0]).astype(complex))
        assert exc_info.value.name == "gamma D + D gamma = 0"

    def test_algebra_must_be_even(self) -> None:
        """代数の元が偶でないと HypothesisError になること"""
        dirac = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
        with pytest.raises(HypothesisError, match="'a' is not even"):
            EvenFredholmModule(1, 1, dirac, {"a": dirac})

    def test_empty(self) -> None:
        """次元0は ValueError になること"""
        with pytest.raises(ValueError, match="positive total"):
            EvenFredholmModule(0, 0, np.zeros((0, 0), dtype=complex))


class TestOddFredholmModule:
    """OddFredholmModuleのテスト"""

    def test_unitary_inverse(self, conjugation: OddFredholmModule) -> None:
        """g⁻¹ = g† であること"""
        assert np.allclose(conjugation.unitary_inverse @ conjugation.unitary, np.eye(3))

    def test_not_unitary(self) -> None:
        """g がユニタリでないと HypothesisError になること"""
        with pytest.raises(HypothesisError, match="g is not unitary"):
            OddFredholmModule(np.eye(2, dtype=complex), 2 * np.eye(2, dtype=complex))

    def test_no_supertrace(self, conjugation: OddFredholmModule) -> None:
        """奇加群の超トレースは FredholmError になること"""
        with pytest.raises(FredholmError, match="odd modules carry no grading"):
            conjugation.supertrace(np.eye(3, dtype=complex))

    def test_derivation_constant(self, commuting_unitary: OddFredholmModule) -> None:
        """[D, g] = 0 なら微分の定数が0であること"""
        assert commuting_unitary.derivation_constant == 0.0


class TestConjugationPath:
    """conjugation_path / dirac_path関数のテスト"""

    def test_endpoints(self, conjugation: OddFredholmModule) -> None:
        """道が D から g⁻¹Dg = diag(−2, 1/2, 1) へ進むこと"""
        path = conjugation_path(conjugation)
        assert np.allclose(path.at(0.0), np.diag([1.0, -2.0, 0.5]))
        assert np.allclose(dirac_path(conjugation, 1.0), np.diag([-2.0, 0.5, 1.0]))

    def test_velocity_is_commutator(self, conjugation: OddFredholmModule) -> None:
        """速度が g⁻¹[D,g] に一致すること"""
        assert velocity_defect(conjugation) < 1e-14

    def test_parameter_range(self, generic_path: LinearPath) -> None:
        """[0, 1] の外は ValueError になること"""
        with pytest.raises(ValueError, match="must lie in"):
            generic_path(1.5)
        assert np.allclose(generic_path(0.5), np.diag([0.0, 2.0]))


class TestLoadModuleSpec:
    """load_module_spec / bundled_module関数のテスト"""

    def test_all_bundled(self) -> None:
        """同梱の例が全て読み込めること"""
        kinds = {name: type(bundled_module(name)) for name in BUNDLED_MODULES}
        assert kinds["index_one"] is EvenFredholmModule
        assert kinds["conjugation_path"] is OddFredholmModule
        assert kinds["generic_path"] is LinearPath

    def test_unknown_bundled(self) -> None:
        """同梱されていない名前は ModuleSpecError になること"""
        with pytest.raises(ModuleSpecError, match="unknown bundled module"):
            bundled_module("missing")

    def test_from_file(self, tmp_path: Path) -> None:
        """JSON ファイルから読み込めること"""
        spec = {"kind": "even", "name": "tiny", "dim_plus": 1, "dim_minus": 1, "D": [[ZERO, ONE], [ONE, ZERO]]}
        path = tmp_path / "tiny.json"
        path.write_text(json.dumps(spec), encoding="utf-8")
        module = load_module_spec(path)
        assert isinstance(module, EvenFredholmModule)
        assert module.name == "tiny"

    def test_complex_entries(self) -> None:
        """[re, im] の組が複素数になること"""
        module = load_module_spec({"kind": "odd", "D": [[ONE, ZERO], [ZERO, ONE]], "g": [[[0.0, 1.0], ZERO], [ZERO, ONE]]})
        assert isinstance(module, OddFredholmModule)
        assert module.unitary[0, 0] == 1j

    def test_invalid_json(self, tmp_path: Path) -> None:
        """壊れた JSON は pydantic の json_invalid エラーになること"""
        path = tmp_path / "broken.json"
        path.write_text("{", encoding="utf-8")
        with pytest.raises(ValidationError, match="Invalid JSON") as exc_info:
            load_module_spec(path)
        assert exc_info.value.errors()[0]["type"] == "json_invalid"

    def test_file_schema_error(self, tmp_path: Path) -> None:
        """ファイルの仕様がスキーマに合わなければ ValidationError になること"""
        path = tmp_path / "extra.json"
        path.write_text('{"kind": "even", "D": [[[1.0, 0.0]]], "colour": "red"}', encoding="utf-8")
        with pytest.raises(ValidationError, match="colour"):
            load_module_spec(path)

    def test_missing_file(self, tmp_path: Path) -> None:
        """存在しないファイルは FileNotFoundError になること"""
        with pytest.raises(FileNotFoundError):
            load_module_spec(tmp_path / "missing.json")

    def test_unknown_field(self) -> None:
        """未知の項目は ValidationError になること"""
        with pytest.raises(ValidationError):
            load_module_spec({"kind": "even", "D": [[ONE]], "colour": "red"})

    def test_even_needs_dimensions(self) -> None:
        """偶加群で次元が無いと ModuleSpecError になること"""
        with pytest.raises(ModuleSpecError, match="need dim_plus and dim_minus"):
            load_module_spec({"kind": "even", "D": [[ONE]]})

    def test_odd_needs_unitary(self) -> None:
        """奇加群で g が無いと ModuleSpecError になること"""
        with pytest.raises(ModuleSpecError, match="odd modules need g"):
            load_module_spec({"kind": "odd", "D": [[ONE]]})

    def test_path_needs_end(self) -> None:
        """道で D_end が無いと ModuleSpecError になること"""
        with pytest.raises(ModuleSpecError, match="paths need D_end"):
            load_module_spec({"kind": "path", "D": [[ONE]]})

    def test_not_square(self) -> None:
        """正方でない行列は ModuleSpecError になること"""
        with pytest.raises(ModuleSpecError, match="non-empty square matrix"):
            load_module_spec({"kind": "odd", "D": [[ONE, ZERO]], "g": [[ONE]]})

    def test_dimension_total_mismatch(self) -> None:
        """次元の和と D の大きさが違うと FredholmError になること"""
        with pytest.raises(FredholmError):
            load_module_spec({"kind": "even", "dim_plus": 2, "dim_minus": 1, "D": [[ZERO, ONE], [ONE, ZERO]]})
