"""Exact computations with Reynolds LieDer pairs.

Every function takes a JSON envelope (a dict or a JSON string) and returns
``(status, report)`` with the same status codes and report layout as the
``reylie`` command-line tool.
"""

import json
from fractions import Fraction

from . import _reylie
from ._reylie import InputError

__all__ = ["InputError", "validate", "cohomology", "deform", "extend", "obstruction", "differential", "to_fractions"]


def _text(doc):
    return doc if isinstance(doc, str) else json.dumps(doc)


def _call(fn, doc, **kw):
    status, report = fn(_text(doc), **kw)
    return status, json.loads(report)


def validate(doc, strict_literal=False, item=""):
    return _call(_reylie.validate, doc, strict_literal=strict_literal, item=item)


def cohomology(doc, complex="ce", degrees=None, basis=False, strict_literal=False, item=""):
    return _call(_reylie.cohomology, doc, complex=complex, degrees=degrees, basis=basis,
                 strict_literal=strict_literal, item=item)


def deform(doc, strict_literal=False, item=""):
    return _call(_reylie.deform, doc, strict_literal=strict_literal, item=item)


def extend(doc, strict_literal=False, item=""):
    return _call(_reylie.extend, doc, strict_literal=strict_literal, item=item)


def obstruction(doc, strict_literal=False, item=""):
    return _call(_reylie.obstruction, doc, strict_literal=strict_literal, item=item)


def differential(doc, complex, degree, item=""):
    """The degree-n differential of a rep (or adjoint rep of a pair) as a list of Fraction rows."""
    return to_fractions(json.loads(_reylie.differential(_text(doc), complex, degree, item)))


def to_fractions(matrix):
    return [[Fraction(x) for x in row] for row in matrix["entries"]]
