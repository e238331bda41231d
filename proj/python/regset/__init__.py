"""Regular point sets of PG(2, Q): constructions, classification and codes.

Reports come back as plain dicts with the same layout as the ``regset``
command line tool.
"""

import json

from ._regset import (
    ClassifyError,
    CodeError,
    ConstructionError,
    FieldError,
    FormatError,
    PointSet,
    ScanError,
    VerifyError,
    build,
    families,
    load,
    suites,
)
from . import _regset

__all__ = [
    "ClassifyError",
    "CodeError",
    "ConstructionError",
    "FieldError",
    "FormatError",
    "PointSet",
    "ScanError",
    "VerifyError",
    "build",
    "classify",
    "code",
    "conjecture",
    "families",
    "hermitian_scan",
    "load",
    "scan_f",
    "spectrum",
    "suites",
    "verify",
]


def classify(X, all_frames=False, workers=1):
    return json.loads(_regset._classify(X, all_frames, workers))


def spectrum(X, directions=False, workers=1):
    return json.loads(_regset._spectrum(X, directions, workers))


def code(X, exhaustive=False, workers=1):
    return json.loads(_regset._code(X, exhaustive, workers))


def verify(suite, q=None, seed=1, workers=1, sample=20):
    return json.loads(_regset._verify(suite, q, seed, workers, sample))


def hermitian_scan(q, sample=0, seed=1, a=None, workers=1):
    return json.loads(_regset._hermitian_scan(q, sample, seed, a, workers))


def scan_f(q, entries=False, workers=1):
    return json.loads(_regset._scan_f(q, entries, workers))


def conjecture(p=2, h=2, sample=0, seed=1, workers=1):
    return json.loads(_regset._conjecture(p, h, sample, seed, workers))
