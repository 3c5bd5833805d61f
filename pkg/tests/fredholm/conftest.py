"""同梱の加群を返すフィクスチャ"""

import pytest

from asymptotic_cyclic.fredholm import EvenFredholmModule, LinearPath, OddFredholmModule, bundled_module


def _even(name: str) -> EvenFredholmModule:
    module = bundled_module(name)
    assert isinstance(module, EvenFredholmModule)
    return module


def _odd(name: str) -> OddFredholmModule:
    module = bundled_module(name)
    assert isinstance(module, OddFredholmModule)
    return module


@pytest.fixture
def index_one() -> EvenFredholmModule:
    """H⁺ = ℂ²、H⁻ = ℂ、指数1の偶加群"""
    return _even("index_one")


@pytest.fixture
def balanced() -> EvenFredholmModule:
    """指数0の偶加群"""
    return _even("balanced")


@pytest.fixture
def commuting_projection() -> EvenFredholmModule:
    """D と可換な射影 p で指数2になる偶加群"""
    return _even("commuting_projection")


@pytest.fixture
def conjugation() -> OddFredholmModule:
    """g⁻¹Dg への道で2回零点を通過する奇加群"""
    return _odd("conjugation_path")


@pytest.fixture
def commuting_unitary() -> OddFredholmModule:
    """[D, g] = 0 の奇加群"""
    return _odd("commuting_unitary")


@pytest.fixture
def generic_path() -> LinearPath:
    """u = 1/2 で上向きに1回零点を通過する道"""
    module = bundled_module("generic_path")
    assert isinstance(module, LinearPath)
    return module
