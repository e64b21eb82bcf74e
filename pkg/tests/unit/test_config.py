# Copyright 2025 Google LLC
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import logging

import pytest

from app.app_utils.config import get_settings
from app.app_utils.telemetry import setup_logging
from app.errors import ConfigurationError, GraphSizeError, WordLengthError
from app.stallings_graph import subgroup
from app.word_algebra import DEFAULT_ALPHABET, parse_word


def test_defaults(monkeypatch: pytest.MonkeyPatch) -> None:
    """Unset variables fall back to the documented defaults."""
    for name in (
        "STALLINGS_MAX_WORD_LENGTH",
        "STALLINGS_MAX_VERTICES",
        "STALLINGS_SWEEP_TIMEOUT_SECONDS",
        "STALLINGS_LOG_LEVEL",
        "STALLINGS_CLOUD_LOGGING",
    ):
        monkeypatch.delenv(name, raising=False)
    settings = get_settings()
    assert settings.max_word_length == 1_000_000
    assert settings.max_graph_vertices == 10_000_000
    assert settings.sweep_timeout_seconds == 300
    assert settings.log_level == "WARNING"
    assert settings.cloud_logging is False


def test_word_length_from_environment(monkeypatch: pytest.MonkeyPatch) -> None:
    """STALLINGS_MAX_WORD_LENGTH caps parsing."""
    monkeypatch.setenv("STALLINGS_MAX_WORD_LENGTH", "5")
    assert len(parse_word("a^5")) == 5
    with pytest.raises(WordLengthError):
        parse_word("a^6")


def test_vertex_cap_from_environment(monkeypatch: pytest.MonkeyPatch) -> None:
    """STALLINGS_MAX_VERTICES caps graph construction."""
    monkeypatch.setenv("STALLINGS_MAX_VERTICES", "2")
    with pytest.raises(GraphSizeError):
        subgroup([parse_word("a^3")], DEFAULT_ALPHABET)


def test_invalid_value_names_variable(monkeypatch: pytest.MonkeyPatch) -> None:
    """A bad value raises ConfigurationError naming the variable."""
    monkeypatch.setenv("STALLINGS_MAX_WORD_LENGTH", "lots")
    with pytest.raises(ConfigurationError, match="STALLINGS_MAX_WORD_LENGTH"):
        get_settings()


def test_setup_logging_level(monkeypatch: pytest.MonkeyPatch) -> None:
    """setup_logging applies the requested level and rejects unknown ones."""
    monkeypatch.delenv("STALLINGS_CLOUD_LOGGING", raising=False)
    root = logging.getLogger()
    previous = root.level
    try:
        setup_logging("debug")
        assert root.level == logging.DEBUG
        with pytest.raises(ConfigurationError):
            setup_logging("chatty")
    finally:
        root.setLevel(previous)
