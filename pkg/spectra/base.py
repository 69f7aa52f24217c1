"""
Base Algorithm Class for the interval spectra toolkit

This module provides the base class that the long-running algorithms
(exhaustive and sampled verification, local search) inherit from.
It handles common functionality such as:
1. Settings lookup
2. Logging with per-algorithm context
3. Run metrics
4. Error handling around execution
"""

import json
import sys
import time
from typing import Any, Dict, Optional

from loguru import logger
from pydantic import BaseModel, Field

from .config import SpectraSettings, get_settings
from .errors import InvalidInput, SpectraError

LOG_FORMAT = (
    "{time:YYYY-MM-DD HH:mm:ss} - {extra[algorithm]} - {level} - {message}"
)


def configure_logging(level: Optional[str] = None) -> None:
    """Route all log output to a single stderr sink and enable the package's logs"""
    logger.remove()
    logger.enable("spectra")
    logger.configure(extra={"algorithm": "spectra"})
    logger.add(sys.stderr, level=(level or get_settings().LOG_LEVEL).upper(), format=LOG_FORMAT)


class AlgorithmMetrics(BaseModel):
    """Metrics tracked for each algorithm"""
    execution_time: float = 0.0
    runs: int = 0
    error_count: int = 0
    warning_count: int = 0
    last_execution: float = Field(default_factory=time.time)
    labelings_checked: int = 0


class BaseAlgorithm:
    """Base class for all toolkit algorithms"""

    algorithm_id = "base"

    def __init__(self, settings: Optional[SpectraSettings] = None):
        self.settings = settings or get_settings()
        self.logger = logger.bind(algorithm=self.__class__.__name__)
        self.metrics = AlgorithmMetrics()

    def log_error(self, error: Exception, context: Optional[Dict[str, Any]] = None) -> None:
        """Log an error with context"""
        error_data = {
            "error_type": error.__class__.__name__,
            "error_code": getattr(error, "code", "unexpected"),
            "error_message": str(error),
            "context": json.dumps(context or {}, default=str),
        }
        self.logger.error("Algorithm error: {}", error_data)
        self.metrics.error_count += 1

    def log_warning(self, message: str, context: Optional[Dict[str, Any]] = None) -> None:
        """Log a warning with context"""
        self.logger.warning("Algorithm warning: {} {}", message, json.dumps(context or {}, default=str))
        self.metrics.warning_count += 1

    def get_metrics(self) -> AlgorithmMetrics:
        """Get current algorithm metrics"""
        return self.metrics

    def validate_input(self, data: Any) -> bool:
        """Validate input data - to be implemented by child classes"""
        raise NotImplementedError

    def process(self, data: Any) -> Any:
        """Process data - to be implemented by child classes"""
        raise NotImplementedError

    def execute(self, data: Any) -> Any:
        """Execute algorithm with timing and error handling"""
        if not self.validate_input(data):
            raise InvalidInput(f"{self.algorithm_id}: invalid input data")

        start_time = time.perf_counter()
        try:
            result = self.process(data)
        except SpectraError as e:
            self.log_error(e, {"algorithm_id": self.algorithm_id, **e.context})
            raise
        except Exception as e:
            self.log_error(e, {"algorithm_id": self.algorithm_id})
            raise
        finally:
            self.metrics.execution_time = time.perf_counter() - start_time
            self.metrics.last_execution = time.time()
            self.metrics.runs += 1
        self.logger.debug(
            "{} finished in {:.3f}s", self.algorithm_id, self.metrics.execution_time
        )
        return result
