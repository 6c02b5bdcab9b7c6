"""Structured timing logs for long-running operations."""

import functools
import json
import logging
import time
from datetime import datetime
from typing import Any, Callable, TypeVar, cast

logger = logging.getLogger(__name__)

F = TypeVar("F", bound=Callable[..., Any])


def _encode(obj: Any) -> str:
    # Fractions, polynomials, enums and paths all have readable str() forms.
    return str(obj)


def log_operation(func: F) -> F:
    """Log one JSON record per call with outcome and execution time."""

    @functools.wraps(func)
    def wrapper(*args: Any, **kwargs: Any) -> Any:
        start_time = time.perf_counter()
        try:
            result = func(*args, **kwargs)
        except Exception as e:
            log_data = {
                "timestamp": datetime.now().isoformat(),
                "successful": False,
                "function_name": func.__qualname__,
                "arguments": {"args": args, "kwargs": kwargs},
                "message": f"Function execution failed: {e}",
                "execution_time": time.perf_counter() - start_time,
            }
            logger.error(json.dumps(log_data, default=_encode))
            raise

        log_data = {
            "timestamp": datetime.now().isoformat(),
            "successful": True,
            "function_name": func.__qualname__,
            "arguments": {"args": args, "kwargs": kwargs},
            "message": "Function execution successful",
            "execution_time": time.perf_counter() - start_time,
        }
        logger.info(json.dumps(log_data, default=_encode))
        return result

    return cast(F, wrapper)
