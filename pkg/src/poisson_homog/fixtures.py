"""
The shipped catalog of example algebras (JSON files under catalog/).
"""

from __future__ import annotations

from importlib import resources
from pathlib import Path

from .io import AlgebraSpec, FormatError, load_algebra


def catalog_dir(override=None) -> Path:
    if override is not None:
        return Path(override)
    return Path(str(resources.files(__package__).joinpath("catalog")))


def list_fixtures(override=None) -> list:
    d = catalog_dir(override)
    if not d.is_dir():
        raise FormatError("fixture directory %s does not exist" % d)
    return sorted(p.stem for p in d.glob("*.json"))


def fixture_path(name: str, override=None) -> Path:
    p = catalog_dir(override) / ("%s.json" % name)
    if not p.is_file():
        raise FormatError("no fixture named %r" % name)
    return p


def load_fixture(name: str, override=None) -> AlgebraSpec:
    return load_algebra(fixture_path(name, override))


def load_catalog(override=None) -> dict:
    return {name: load_fixture(name, override) for name in list_fixtures(override)}
