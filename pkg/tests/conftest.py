from __future__ import annotations

import functools

import pytest

from superbasis.operators import build_module
from superbasis.weights import parse_signature, parse_weight

# (algebra, weight, theta); every module here has dimension <= 64.
CORPUS = [
    ("1,1", "0|-1", 2),
    ("1,1", "-1|0", 2),
    ("1,1", "1|0", 1),
    ("1,1", "0|0", 1),
    ("1,1", "0|0", 2),
    ("1,1", "1/2|-3/2", 2),
    ("2,1", "0,0|-3", 2),
    ("2,1", "0,0|0", 2),
    ("2,1", "0,0|-1", 2),
    ("2,1", "1/2,1/2|-5/2", 2),
    ("2,1", "1,0|0", 1),
    ("2,1", "2,1|0", 1),
    ("2,1", "3,0|1", 1),
    ("1,2", "0|-1,-2", 2),
    ("1,2", "0|0,-1", 2),
    ("1,2", "2|0,0", 1),
    ("1,2", "1|1,0", 1),
    ("1,2", "3|1,0", 1),
    ("2,2", "2,1|0,0", 1),
    ("2,2", "1,0|0,0", 1),
    ("2,2", "0,0|-3,-3", 2),
    ("2,2", "0,0|0,-1", 2),
    ("2,2", "1,0|-4,-5", 2),
    ("2,2", "4,3|0,0", 1),
]


def weight(alg: str, w: str):
    return parse_weight(w, parse_signature(alg))


@functools.lru_cache(maxsize=None)
def module(alg: str, w: str, theta: int):
    return build_module(weight(alg, w), theta)


@pytest.fixture(params=CORPUS, ids=lambda c: f"gl({c[0].replace(',', '|')})[{c[1]}]t{c[2]}")
def corpus_module(request):
    return module(*request.param)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(RESULTS):
        ok, line = RESULTS[num]
        terminalreporter.write_line(f"criterion {num}: {'PASS' if ok else 'FAIL'}  {line}")
