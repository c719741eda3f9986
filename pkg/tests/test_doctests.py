import doctest
import importlib
import pkgutil

import pytest

import ssvpoly

MODULES = sorted(
    m.name for m in pkgutil.iter_modules(ssvpoly.__path__, "ssvpoly.") if not m.name.endswith("__main__")
)


@pytest.mark.parametrize("name", MODULES)
def test_module_doctests(name):
    mod = importlib.import_module(name)
    res = doctest.testmod(mod, optionflags=doctest.ELLIPSIS)
    assert res.failed == 0
