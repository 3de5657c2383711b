import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from liesymp import (abelian, dim6, ex1, ex2, ex3, ex4,
                     character_extension, product_extension, thurston)


def _catalog_entries():
    return [
        ("ex1", ex1()),
        ("ex2", ex2()),
        ("ex3", ex3()),
        ("ex4", ex4()),
        ("dim6", dim6()),
        ("thurston(1/2)", thurston("1/2")),
        ("thurston(1)", thurston(1)),
        ("thurston(2)", thurston(2)),
        ("thurston(3)", thurston(3)),
        ("abelian(1)", abelian(1)),
        ("abelian(2)", abelian(2)),
        ("abelian(3)", abelian(3)),
    ]


@pytest.fixture(scope="session")
def catalog():
    """name -> validated triple, for every builtin entry."""
    return dict(_catalog_entries())


@pytest.fixture(scope="session")
def extended_catalog(catalog):
    """Catalog plus one product and one character extension of each
    extensible entry, so identity tests also sweep constructed triples."""
    out = dict(catalog)
    out["prod(ex2)"] = product_extension(catalog["ex2"])
    out["prod(dim6)"] = product_extension(catalog["dim6"])
    out["char(ex1)"] = character_extension(catalog["ex1"])
    out["char(ex3)"] = character_extension(catalog["ex3"])
    out["char(ex4)"] = character_extension(catalog["ex4"])
    return out
