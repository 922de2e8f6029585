import pytest

from origami.perms import parse_cycles
from origami.surface import Origami


@pytest.fixture(scope="session")
def l3() -> Origami:
    """The 3-square L-origami: one zero of order 2, genus 2."""
    return Origami(parse_cycles("(1 2)", 3), parse_cycles("(1 3)", 3))
