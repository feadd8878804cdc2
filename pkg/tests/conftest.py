"""
Global pytest configuration and fixtures.
"""
import logging.config
import shutil
from pathlib import Path

import pytest

from coalesce import build_logging_config
from modules.coalescence import CoalescenceFamily, build_family, coalesce
from modules.graph import complete_graph, cycle_graph, path_graph, serialize_graph


@pytest.fixture(scope="session")
def test_output_dir(request):
    """Create and manage test output directory."""
    output_dir = Path("tests/test_data/output")
    output_dir.mkdir(parents=True, exist_ok=True)

    def cleanup():
        if output_dir.exists():
            shutil.rmtree(output_dir)

    request.addfinalizer(cleanup)
    return output_dir


@pytest.fixture(scope="session")
def molecule():
    """Carbon skeleton of 1,2-dicyclohexylethane: two hexagons joined by a 4-vertex path."""
    return build_family(CoalescenceFamily.DUMBBELL, 6, 6, 4).result


@pytest.fixture(scope="session")
def bowtie():
    """Two triangles sharing one vertex."""
    return coalesce(complete_graph(3), [2], complete_graph(3), [0]).result


@pytest.fixture(scope="session")
def diamond():
    """K4 minus an edge, as two triangles merged along an edge."""
    return coalesce(complete_graph(3), [0, 1], complete_graph(3), [0, 1]).result


@pytest.fixture(scope="session")
def ladder():
    """Two 4-cycles sharing an edge."""
    return coalesce(cycle_graph(4), [0, 1], cycle_graph(4), [0, 1]).result


@pytest.fixture(scope="session")
def lollipop_4_4():
    """4-cycle with a 4-vertex path hanging off one vertex (7 vertices)."""
    return build_family(CoalescenceFamily.LOLLIPOP, 4, 4).result


@pytest.fixture(scope="session")
def molecule_file(test_output_dir, molecule):
    """The molecule written in edge-list format."""
    path = test_output_dir / "molecule.el"
    path.write_text(serialize_graph(molecule))
    return path


@pytest.fixture(scope="session")
def triangle_file(test_output_dir):
    path = test_output_dir / "k3.el"
    path.write_text(serialize_graph(complete_graph(3)))
    return path


@pytest.fixture(scope="session")
def path_file(test_output_dir):
    path = test_output_dir / "p4.el"
    path.write_text(serialize_graph(path_graph(4)))
    return path


@pytest.fixture(scope="session")
def log_dir(request):
    """Directory for the JSON test log; kept when a test fails."""
    path = Path("tests/test_data/logs")
    path.mkdir(parents=True, exist_ok=True)

    def cleanup():
        if request.session.testsfailed == 0 and path.exists():
            shutil.rmtree(path, ignore_errors=True)

    request.addfinalizer(cleanup)
    return path


@pytest.fixture(autouse=True)
def setup_logging(log_dir):
    """Send the coalesce loggers to a JSON file at DEBUG, as the CLI would with --log-json --debug."""
    config = build_logging_config("DEBUG", json_format=True)
    config["handlers"] = {
        "test_log": {
            "class": "logging.FileHandler",
            "filename": str(log_dir / "test.log"),
            "formatter": "json",
            "level": "DEBUG",
        }
    }
    config["loggers"]["coalesce"]["handlers"] = ["test_log"]
    logging.config.dictConfig(config)
