import os
import sys


def find_package_file(*path):
    """Return the full path to a file from the permdual package"""
    current_path = os.path.dirname(__file__)
    return os.path.join(current_path, *path)


def read_package_file(*path):
    """Return the content of a file from the permdual package"""
    with open(find_package_file(*path), encoding="utf-8") as fp:
        return fp.read()


def replace_value(template, pattern, value):
    """Set the given pattern to the desired value in the template,
    after making sure that the pattern is found exactly once."""
    assert isinstance(template, str)
    assert template.count(pattern) == 1, f"{pattern!r} should appear once in the template"
    return template.replace(pattern, value)


def read_text_input(path):
    """Read a text input, '-' meaning stdin"""
    if path in (None, "-"):
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fp:
        return fp.read()


def parse_range(text):
    """Parse an inclusive range like '3..6' (or a single integer)"""
    if ".." in text:
        low, high = text.split("..", 1)
        low, high = int(low), int(high)
    else:
        low = high = int(text)
    if low > high:
        raise ValueError(f"Empty range {text!r}")
    return low, high
