"""
validation.py - Contains validation functions for user inputs.
This module validates command-line values and poset file contents before
they reach the engines.
"""

import re

from .betti_table import CONVENTIONS
from .linalg import is_valid_characteristic

ENGINES = ('auto', 'oracle', 'strand', 'tree')

# --- Numeric Validation ---

def validate_n(value):
    """
    Validates the number of letterplace slots.

    Args:
        value: The raw value (int or str)

    Returns:
        tuple: (is_valid, error_message, converted_value)
    """
    if value is None or (isinstance(value, str) and not value.strip()):
        return False, "n cannot be empty.", None

    try:
        n = int(value)
    except (ValueError, TypeError):
        return False, f"n must be an integer, got '{value}'.", None

    if n < 1:
        return False, "n must be at least 1.", None

    return True, "", n

def validate_characteristic(value):
    """
    Validates a field characteristic.

    Args:
        value: The raw value (int or str)

    Returns:
        tuple: (is_valid, error_message, converted_value)
    """
    try:
        p = int(value)
    except (ValueError, TypeError):
        return False, f"Characteristic must be an integer, got '{value}'.", None

    if not is_valid_characteristic(p):
        return False, f"Characteristic must be 0 or a prime below 2^31, got {p}.", None

    return True, "", p

def validate_characteristics(values):
    """
    Validates a list of characteristics, accepting comma separated items.

    Args:
        values (list): Raw values, e.g. ['0,2', '3']

    Returns:
        tuple: (is_valid, error_message, converted_list) with duplicates removed, order kept
    """
    result = []
    for raw in values or []:
        for item in str(raw).split(','):
            if not item.strip():
                continue
            is_valid, error, p = validate_characteristic(item.strip())
            if not is_valid:
                return False, error, None
            if p not in result:
                result.append(p)
    if not result:
        result = [0]
    return True, "", result

def validate_workers(value):
    """Validates the worker count; returns (is_valid, error_message, converted_value)."""
    try:
        workers = int(value)
    except (ValueError, TypeError):
        return False, f"Worker count must be an integer, got '{value}'.", None
    if workers < 1:
        return False, "Worker count must be at least 1.", None
    return True, "", workers

# --- Option Validation ---

def validate_engine(name):
    """
    Validates an engine name.

    Returns:
        tuple: (is_valid, error_message)
    """
    if name not in ENGINES:
        return False, f"Unknown engine '{name}'. Choose from: {', '.join(ENGINES)}."
    return True, ""

def validate_engine_list(value):
    """Validates a comma separated engine list for check; returns (is_valid, error_message, engines)."""
    engines = [item.strip() for item in (value or '').split(',') if item.strip()]
    for name in engines:
        if name == 'auto' or name not in ENGINES:
            return False, f"Unknown engine '{name}' for check. Choose from: oracle, strand, tree.", None
    return True, "", engines

def validate_convention(name):
    if name not in CONVENTIONS:
        return False, f"Unknown convention '{name}'. Choose ideal or quotient."
    return True, ""

# --- Poset File Validation ---

def validate_poset_text(text):
    """
    Cheap structural validation of poset file content before parsing.

    Catches empty files and lines containing characters outside the format;
    order-theoretic errors (cycles, unknown elements) are left to the parser.

    Args:
        text (str): The file content

    Returns:
        tuple: (is_valid, error_message)
    """
    if text is None:
        return False, "Poset file could not be read."

    declared = False
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split('#', 1)[0].strip()
        if not line:
            continue
        if re.search(r'[,;|]', line):
            return False, f"line {number}: element names cannot contain ',', ';' or '|'."
        declared = True

    if not declared:
        return False, "Poset file declares no elements."

    return True, ""
