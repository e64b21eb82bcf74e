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
from typing import Any

from app.app_utils.config import get_settings
from app.errors import ConfigurationError

_cloud_logger: Any = None


def setup_logging(level: str | None = None) -> None:
    """Configure root logging for command-line runs.

    The level comes from ``level`` or ``STALLINGS_LOG_LEVEL``. With
    ``STALLINGS_CLOUD_LOGGING`` set, records are also shipped to Google Cloud
    Logging when the optional ``cloud`` extra is installed.
    """
    global _cloud_logger
    settings = get_settings()
    resolved = (level or settings.log_level).upper()
    if resolved not in logging.getLevelNamesMapping():
        raise ConfigurationError(f"Unknown log level {resolved!r}")
    logging.basicConfig(
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
    )
    logging.getLogger().setLevel(resolved)
    if not settings.cloud_logging:
        return
    try:
        from google.cloud import logging as google_cloud_logging
    except ImportError:
        logging.warning(
            "STALLINGS_CLOUD_LOGGING is set but google-cloud-logging is not installed"
        )
        return
    logging.info("Setting up Cloud Logging handler...")
    client = google_cloud_logging.Client()
    client.setup_logging(log_level=logging.getLevelName(resolved))
    _cloud_logger = client.logger("stallings-toolkit")


def log_report(payload: dict[str, Any]) -> None:
    """Ship a structured verification payload to Cloud Logging, if configured."""
    if _cloud_logger is None:
        logging.getLogger(__name__).debug("Cloud logging disabled; report not shipped")
        return
    _cloud_logger.log_struct(payload, severity="INFO")
