"""
Validation utility functions for arguments coming from callers and files.
"""
from cubical_lab.utils.errors import CapacityError, InputError


def validate_required(value, field_name="Field"):
    """
    Validate that a required value is present.

    Args:
        value: The value to validate
        field_name: Name of the field for error messages

    Raises:
        InputError: if the value is None or an empty string
    """
    if value is None or (isinstance(value, str) and not value.strip()):
        raise InputError(f"{field_name} is required")
    return value


def validate_non_negative_int(value, field_name="Field"):
    """
    Validate that a value is a non-negative whole number.

    Args:
        value: The value to validate (int or numeric string)
        field_name: Name of the field for error messages

    Returns:
        int: the validated value
    """
    try:
        num = int(value)
        if isinstance(value, float) and num != value:
            raise ValueError
    except (ValueError, TypeError):
        raise InputError(f"{field_name} must be a whole number") from None
    if num < 0:
        raise InputError(f"{field_name} must be a non-negative number")
    return num


def validate_index(value, bound, field_name="Index"):
    """Validate 0 <= value < bound."""
    num = validate_non_negative_int(value, field_name)
    if num >= bound:
        raise InputError(f"{field_name} {num} out of range (must be < {bound})")
    return num


def validate_at_most(value, limit, field_name="Value"):
    """Validate a size against a configured capacity limit."""
    num = validate_non_negative_int(value, field_name)
    if num > limit:
        raise CapacityError(f"{field_name} {num} exceeds the limit {limit}", bound=field_name)
    return num


def validate_choice(value, choices, field_name="Value"):
    """Validate that value is one of the allowed choices."""
    if value not in choices:
        allowed = ", ".join(str(c) for c in choices)
        raise InputError(f"{field_name} must be one of: {allowed} (got {value!r})")
    return value


def validate_length(values, expected, field_name="Sequence"):
    """Validate the length of a tuple or list."""
    if len(values) != expected:
        raise InputError(f"{field_name} has length {len(values)}, expected {expected}")
    return values


def parse_int_list(text, expected=None, field_name="List"):
    """
    Parse a comma separated list of non-negative integers, e.g. "2,2,3".

    Args:
        text: the string to parse
        expected: required number of entries, or None
        field_name: Name of the field for error messages

    Returns:
        tuple: the parsed integers
    """
    validate_required(text, field_name)
    parts = [p.strip() for p in str(text).split(",")]
    values = tuple(validate_non_negative_int(p, field_name) for p in parts)
    if expected is not None:
        validate_length(values, expected, field_name)
    return values


def validate_order_data(data, kind="Order"):
    """
    Check the JSON layout shared by lattices and posets.

    Returns:
        tuple: (elements list, leq pair list, name)
    """
    if not isinstance(data, dict) or "elements" not in data:
        raise InputError(f"{kind} description needs an 'elements' list")
    elements = data["elements"]
    if not isinstance(elements, (list, tuple)):
        raise InputError(f"{kind} 'elements' must be a list")
    if any(not isinstance(e, (str, int)) for e in elements):
        raise InputError(f"{kind} elements must be strings or numbers")
    pairs = data.get("leq", [])
    if not isinstance(pairs, (list, tuple)):
        raise InputError(f"{kind} 'leq' must be a list of pairs")
    for pair in pairs:
        if not isinstance(pair, (list, tuple)) or len(pair) != 2 or any(not isinstance(x, (str, int)) for x in pair):
            raise InputError(f"Each 'leq' entry must be a pair [a, b], got {pair!r}")
    name = data.get("name", "")
    if not isinstance(name, str):
        raise InputError(f"{kind} 'name' must be a string")
    return elements, pairs, name
