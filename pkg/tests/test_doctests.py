import doctest
import importlib

import pytest

MODULES = ["affschub.cartan", "affschub.affweyl", "affschub.coeffring", "affschub.nilhecke", "affschub.typea",
           "affschub.gkm.classes", "affschub.gkm.coproduct", "affschub.gkm.peterson", "affschub.gkm.recursion",
           "affschub.gkm.operators", "affschub.cli"]


@pytest.mark.parametrize("name", MODULES)
def test_module_doctests(name):
    res = doctest.testmod(importlib.import_module(name))
    assert res.failed == 0
