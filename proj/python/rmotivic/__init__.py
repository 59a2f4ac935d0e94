"""Bindings to the rmot C++ library."""
import json

from ._rmotivic import ParseError, a1_count, adem_reduce, scan, theorem_tags
from ._rmotivic import module_json as _module_json
from ._rmotivic import verify_theorem as _verify_theorem


def verify_theorem(tag):
    return json.loads(_verify_theorem(tag))


def module(vector):
    return json.loads(_module_json(list(vector)))


__all__ = ["ParseError", "a1_count", "adem_reduce", "scan", "theorem_tags", "verify_theorem", "module"]
