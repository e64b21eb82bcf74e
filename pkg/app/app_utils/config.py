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

import os

from pydantic import BaseModel, ConfigDict, Field, ValidationError

from app.errors import ConfigurationError

_ENV_FIELDS = {
    "STALLINGS_MAX_WORD_LENGTH": "max_word_length",
    "STALLINGS_MAX_VERTICES": "max_graph_vertices",
    "STALLINGS_SWEEP_TIMEOUT_SECONDS": "sweep_timeout_seconds",
    "STALLINGS_LOG_LEVEL": "log_level",
    "STALLINGS_CLOUD_LOGGING": "cloud_logging",
}


class Settings(BaseModel):
    """Runtime limits and logging switches, sourced from the environment."""

    model_config = ConfigDict(frozen=True)

    max_word_length: int = Field(default=1_000_000, ge=1)
    max_graph_vertices: int = Field(default=10_000_000, ge=1)
    sweep_timeout_seconds: int = Field(default=300, ge=1)
    log_level: str = "WARNING"
    cloud_logging: bool = False


def get_settings() -> Settings:
    """Read settings from the environment at call time.

    Raises:
        ConfigurationError: if a variable is set to a value that does not
            validate, naming the offending variable.
    """
    values = {
        field: os.environ[env]
        for env, field in _ENV_FIELDS.items()
        if os.environ.get(env, "") != ""
    }
    try:
        return Settings.model_validate(values)
    except ValidationError as e:
        field = str(e.errors()[0]["loc"][0]) if e.errors() else "?"
        env = next((k for k, v in _ENV_FIELDS.items() if v == field), field)
        raise ConfigurationError(
            f"Invalid value for {env}={values.get(field)!r}: {e.errors()[0]['msg']}"
        ) from e
