import pytest

from composer import ComposerConfig, SequenceSource, compose
from config import CHROMATIC_MODE, MAJOR_MODE, MINOR_MODE
from theory import Mode, Scale


@pytest.fixture
def major_mode():
    return Mode(Scale(MAJOR_MODE))


@pytest.fixture
def minor_mode():
    return Mode(Scale(MINOR_MODE))


@pytest.fixture
def chromatic_scale():
    return Scale(CHROMATIC_MODE)


@pytest.fixture
def default_cfg(major_mode):
    """Mode majeur posé sur A, hauteur 1, système standard, une noire"""
    return ComposerConfig(mode=major_mode, root=1)


@pytest.fixture
def prime_duet(default_cfg):
    def make(n, cfg=None):
        return compose(SequenceSource.of_primes(n), cfg or default_cfg)
    return make
