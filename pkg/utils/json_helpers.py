"""
JSON serialization helpers for zdg-spectra

Handles serialization of custom objects like enums, dataclasses, fractions
and numpy values.
"""

import json
from enum import Enum
from dataclasses import is_dataclass, asdict
from fractions import Fraction
from pathlib import Path
from typing import Any

import numpy as np


def make_json_serializable(obj: Any) -> Any:
    """
    Convert objects to JSON-serializable format

    Args:
        obj: Object to convert

    Returns:
        JSON-serializable version of the object
    """
    if obj is None:
        return None

    # Handle enums
    if isinstance(obj, Enum):
        return obj.value

    # Objects that know how to render themselves
    if hasattr(obj, 'to_dict') and callable(obj.to_dict):
        return make_json_serializable(obj.to_dict())

    # Handle dataclasses
    if is_dataclass(obj):
        return make_json_serializable(asdict(obj))

    # Exact rationals keep their exactness as "num/den"
    if isinstance(obj, Fraction):
        return str(obj.numerator) if obj.denominator == 1 else f"{obj.numerator}/{obj.denominator}"

    # Handle numpy values
    if isinstance(obj, np.ndarray):
        return [make_json_serializable(item) for item in obj.tolist()]
    if isinstance(obj, np.bool_):
        return bool(obj)
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, np.floating):
        return float(obj)

    # Handle Path objects
    if isinstance(obj, Path):
        return str(obj)

    # Handle dictionaries
    if isinstance(obj, dict):
        return {str(make_json_serializable(key)): make_json_serializable(value) for key, value in obj.items()}

    # Handle lists and tuples
    if isinstance(obj, (list, tuple)):
        return [make_json_serializable(item) for item in obj]

    # Handle sets
    if isinstance(obj, (set, frozenset)):
        return [make_json_serializable(item) for item in sorted(obj, key=str)]

    # Return primitive types as-is
    if isinstance(obj, (str, int, float, bool)):
        return obj

    # For other objects, try to convert to string
    try:
        return str(obj)
    except Exception:
        return f"<{type(obj).__name__} object>"


def safe_json_dumps(obj: Any, **kwargs) -> str:
    """
    Safely serialize object to JSON string

    Args:
        obj: Object to serialize
        **kwargs: Additional arguments for json.dumps

    Returns:
        JSON string
    """
    serializable_obj = make_json_serializable(obj)
    return json.dumps(serializable_obj, **kwargs)
