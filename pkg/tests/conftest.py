from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from resource_hub import qa
from resource_hub.service.config import ServiceConfig, packaged_data_dir

TEST_DATA = Path(__file__).resolve().parent / "data"


@pytest.fixture(scope="session")
def data_dir() -> Path:
    return packaged_data_dir()


@pytest.fixture(scope="session")
def corpus(data_dir):
    return qa.load_corpus(data_dir / "qa_corpus.jsonl")


@pytest.fixture()
def offline_config(tmp_path) -> ServiceConfig:
    return ServiceConfig(offline_fixtures=True, event_log_path=str(tmp_path / "events.log"))
