from pathlib import Path

import pytest

from hanprep.ids import load_ids_file

DATA_DIR = Path(__file__).resolve().parent.parent / "data"


@pytest.fixture(scope="session")
def data_dir() -> Path:
    return DATA_DIR


@pytest.fixture(scope="session")
def ids_dict(data_dir):
    return load_ids_file(data_dir / "ids_sample.txt")
