"""
Fixture profiles: load bundled inputs from fixtures/*.json.

Each JSON file defines one named input:
  - kind "frobenius": explicit C matrix and block sizes
  - kind "random-frobenius": block sizes plus a committed RNG seed
  - kind "compare": a pair of series for the functional-equation comparator
  - kind "weierstrass": a single series
plus default levels and precisions for the commands that use it.

Adding a fixture = drop a new JSON file.
"""

import json
import logging
from dataclasses import dataclass, field
from pathlib import Path

from config.settings import settings
from padic.errors import SchemaError

logger = logging.getLogger(__name__)

FIXTURES_DIR = Path(__file__).parent / settings.FIXTURES_DIR

_KINDS = {"frobenius", "random-frobenius", "compare", "weierstrass"}


@dataclass
class FixtureDefaults:
    n: int | None = None
    n_max: int | None = None
    D: int | None = None
    N: int | None = None


@dataclass
class FixtureProfile:
    name: str
    description: str
    kind: str
    p: int
    payload: dict
    seed: int | None = None
    defaults: FixtureDefaults = field(default_factory=FixtureDefaults)


def _parse_fixture(data: dict) -> FixtureProfile:
    """Parse a raw JSON dict into a typed FixtureProfile."""
    kind = data["kind"]
    if kind not in _KINDS:
        raise ValueError(f"unknown fixture kind {kind!r}")
    return FixtureProfile(
        name=data["name"],
        description=data.get("description", ""),
        kind=kind,
        p=int(data["p"]),
        payload=data.get("payload", {}),
        seed=data.get("seed"),
        defaults=FixtureDefaults(**data.get("defaults", {})),
    )


def _read_fixture(path: Path) -> FixtureProfile:
    """Read and parse one fixture file; any defect is a SchemaError naming the file."""
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
        return _parse_fixture(data)
    except (KeyError, TypeError, ValueError) as exc:
        raise SchemaError(f"fixture {path.name} is malformed: {exc!r}") from exc


def load_all_fixtures(directory: Path | None = None) -> dict[str, FixtureProfile]:
    """Load all fixtures from fixtures/*.json; a malformed file raises SchemaError."""
    directory = directory or FIXTURES_DIR
    fixtures: dict[str, FixtureProfile] = {}
    if not directory.exists():
        logger.warning(f"Fixtures directory not found: {directory}")
        return fixtures

    for path in sorted(directory.glob("*.json")):
        fixture = _read_fixture(path)
        fixtures[fixture.name] = fixture
        logger.debug(f"[fixture] Loaded {fixture.name} ({fixture.kind}, p={fixture.p})")

    return fixtures


def load_fixture(name: str) -> FixtureProfile:
    """Load a single fixture by name."""
    path = FIXTURES_DIR / f"{name}.json"
    if not path.exists():
        raise FileNotFoundError(f"Fixture not found: {path}")
    return _read_fixture(path)
