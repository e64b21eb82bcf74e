import json
import logging
from datetime import datetime, timezone
from typing import Any

logger = logging.getLogger(__name__)


def _log_stage_complete(stage: str, level: int = logging.INFO, **fields: Any) -> None:
    """Emit a structured log entry for a completed computation stage."""
    if not logger.isEnabledFor(level):
        return
    logger.log(
        level,
        json.dumps(
            {
                "stage": stage,
                "status": "complete",
                **fields,
                "timestamp": datetime.now(timezone.utc).isoformat(),
            }
        ),
    )
