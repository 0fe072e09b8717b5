"""Exact checks on graded algebras, co-Kähler models and Sullivan models."""

import json
from fractions import Fraction

from ._cokahler import (
    InputError,
    betti,
    commands,
    exit_status,
    exterior_rank,
    minimal_model,
    normalize,
)
from . import _cokahler

__all__ = [
    "InputError",
    "Result",
    "betti",
    "commands",
    "exit_status",
    "exterior_rank",
    "minimal_model",
    "normalize",
    "parse_scalar",
    "run",
]


class Result:
    """Report of one command, plus the algebra document it produced."""

    def __init__(self, report, document):
        self.report = json.loads(report)
        self.document = document

    @property
    def verdict(self):
        return self.report["verdict"]

    @property
    def passed(self):
        return self.verdict == "pass"

    @property
    def betti(self):
        return self.report.get("betti")

    @property
    def checks(self):
        return self.report["checks"]

    def __repr__(self):
        return f"Result({self.report['command']!r}, {self.verdict!r})"


def run(command, document, *, max_degree=None, omega="omega", eta="eta", dim=None):
    """Runs a command on document text (or a dict) and returns a Result."""
    if isinstance(document, dict):
        document = json.dumps(document)
    report, produced = _cokahler.run(command, document, max_degree, omega, eta, dim)
    return Result(report, produced)


def parse_scalar(text):
    num, den = _cokahler.parse_scalar(text)
    return Fraction(num, den)
