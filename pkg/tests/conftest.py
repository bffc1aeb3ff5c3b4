from pathlib import Path

import pytest

from fleetsched import load_taskset

DATA = Path(__file__).resolve().parents[1] / "data"


@pytest.fixture(scope="session")
def example1():
    return load_taskset(DATA / "example1.json")


@pytest.fixture(scope="session")
def example2():
    return load_taskset(DATA / "example2.json")


@pytest.fixture(scope="session")
def example3():
    return load_taskset(DATA / "example3.json")
