import sys
import itertools

import numpy as np
import pytest


def brute_local_operator(op, start, total):
    """Embed ``op`` by explicit index arithmetic over basis bit strings.

    Independent of ``np.kron``: entry (row, col) of the embedding is the
    ``op`` entry for the local bits when the remaining bits agree.
    """
    k = op.shape[0].bit_length() - 1
    dim = 2 ** total
    out = np.zeros((dim, dim), dtype=complex)
    for row, col in itertools.product(range(dim), repeat=2):
        rbits = format(row, f"0{total}b")
        cbits = format(col, f"0{total}b")
        lo, hi = start - 1, start - 1 + k
        if rbits[:lo] + rbits[hi:] != cbits[:lo] + cbits[hi:]:
            continue
        out[row, col] = op[int(rbits[lo:hi], 2), int(cbits[lo:hi], 2)]
    return out


def r_from_action(m):
    """R built column by column from its action on |abc>."""
    nu = -1 if m == 3 else 1
    c, s = np.cos(np.pi / m), np.sin(np.pi / m)
    r = np.zeros((8, 8), dtype=complex)
    for idx in range(8):
        a, c_bit = idx >> 2, idx & 1
        flipped = idx ^ 0b010
        if a == c_bit:
            r[idx, idx] += nu * c
            r[flipped, idx] += 1j * s
        else:
            r[idx, idx] += -1j * s
            r[flipped, idx] += c
    return r


@pytest.fixture
def rng():
    return np.random.default_rng(20261016)


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    lines = getattr(module, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: int(s.split()[1])):
            terminalreporter.write_line(line)
