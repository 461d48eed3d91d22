"""Exact Leonard-system toolkit: construction from parameter arrays, the 24
distinguished bases, and closed-form transition maps checked against a
change-of-basis oracle.  Thin wrapper over the C++ extension; exact scalars
cross the boundary as strings ("a" or "a/b")."""

import json

try:
    from ._leonardpairs import MathError, ParseError, System, basis_tags, __version__
except ImportError:  # development layout: extension next to the package
    from _leonardpairs import MathError, ParseError, System, basis_tags, __version__

__all__ = [
    "System",
    "MathError",
    "ParseError",
    "basis_tags",
    "load",
    "verify",
    "__version__",
]


def load(source):
    """Build a validated system from a JSON document, dict, or file path."""
    if isinstance(source, dict):
        return System(json.dumps(source))
    text = str(source)
    if text.lstrip().startswith("{"):
        return System(text)
    with open(text, "r", encoding="utf-8") as handle:
        return System(handle.read())


def verify(source, suites=(), relatives=False, rescale_check=False):
    """Run the verification suites; returns the report as a dict."""
    system = source if isinstance(source, System) else load(source)
    return json.loads(system.verify_json(list(suites), relatives, rescale_check))
