import attrs
import pytest
from outerdom.config import OuterdomConfig
from outerdom.generators import figure2, hexagon_fan3, octahedron, seven_vertex
from outerdom.hamiltonian import HamTriangulation, PipelineReport
from outerdom.mop import MopGraph, build_mop
from outerdom.value_objects import Branch, Side


@pytest.fixture(name="triangle")
def triangle_fix() -> MopGraph:
    """Return the smallest MOP."""
    return build_mop(3, [])


@pytest.fixture(name="hexagon")
def hexagon_fix() -> MopGraph:
    """Return the hexagon with an internal triangle on 1, 3, 5."""
    return hexagon_fan3()


@pytest.fixture(name="fan6")
def fan6_fix() -> MopGraph:
    """Return the 6-vertex fan from vertex 1."""
    return build_mop(6, [(1, 3), (1, 4), (1, 5)])


@pytest.fixture(name="fan7")
def fan7_fix() -> MopGraph:
    """Return the 7-vertex fan from vertex 1."""
    return build_mop(7, [(1, 3), (1, 4), (1, 5), (1, 6)])


@pytest.fixture(name="fig2")
def fig2_fix() -> MopGraph:
    """Return the 14-vertex MOP with k = 1 and domination number 4."""
    return figure2()


@pytest.fixture(name="octa")
def octa_fix() -> HamTriangulation:
    """Return the octahedron split along 1..6."""
    return octahedron()


@pytest.fixture(name="seven")
def seven_fix() -> HamTriangulation:
    """Return the 7-vertex triangulation with domination number 2."""
    return seven_vertex()


@pytest.fixture(name="config")
def config_fix(monkeypatch: pytest.MonkeyPatch) -> OuterdomConfig:
    """Return a serial configuration unaffected by the environment."""
    for field in attrs.fields(OuterdomConfig):
        monkeypatch.delenv(f"OUTERDOM_{field.name.upper()}", raising=False)
    return OuterdomConfig(workers=1)


@pytest.fixture(name="near_miss")
def near_miss_fix() -> PipelineReport:
    """Return a pipeline report for a set of size ceil(5n / 16) on 23 vertices."""
    return PipelineReport(
        n=23,
        branch=Branch.SIDE,
        c=11,
        c_int=6,
        c_ext=5,
        vertices=(1, 4, 7, 10, 13, 16, 19, 22),
        size=8,
        bound_5n16=7,
        gamma_k_bound=7,
        good_cycle=True,
        side=Side.INTERIOR,
        near_miss=True,
    )
