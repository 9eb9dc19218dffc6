import numpy as np
import pytest


def check(label, ok, detail=""):
    """Print one PASS/FAIL line for a criterion, then assert it."""
    print(f"{label}: {'PASS' if ok else 'FAIL'} {detail}".rstrip())
    assert ok, detail


def rel_err(a, b):
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    n = max(a.size, b.size)
    a = np.pad(a, (0, n - a.size))
    b = np.pad(b, (0, n - b.size))
    return float(np.max(np.abs(a - b)) / max(np.max(np.abs(a)), np.max(np.abs(b)), 1e-300))


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)
