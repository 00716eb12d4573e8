from __future__ import annotations

import pytest

from drltool.fixtures import kickoff_assessment, pre_experiment_assessment, sample_project
from drltool.questions import default_questionnaire


def pytest_addoption(parser):
    parser.addoption(
        "--regen-golden",
        action="store_true",
        default=False,
        help="rewrite the golden SVG files instead of comparing against them",
    )


@pytest.fixture
def default_def():
    return default_questionnaire()


@pytest.fixture
def kickoff():
    return kickoff_assessment()


@pytest.fixture
def pre_experiment():
    return pre_experiment_assessment()


@pytest.fixture
def demo_project():
    return sample_project()
