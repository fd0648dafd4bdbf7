"""Classical strange-recursion generators used as cross-checks."""
from __future__ import annotations

from .errors import IndexUnderflow


class MemoTable:
    """1-indexed growable table seeded with two initial values.

    Entries are written bottom-up exactly once; completed tables are safe
    for concurrent reads.
    """

    def __init__(self, seed1: int = 1, seed2: int = 1):
        self._values = [seed1, seed2]

    def __len__(self) -> int:
        return len(self._values)

    def __getitem__(self, n: int) -> int:
        if n < 1 or n > len(self._values):
            raise IndexUnderflow(n)
        return self._values[n - 1]

    def append(self, value: int) -> None:
        self._values.append(value)


def hofstadter_q_table(n: int) -> MemoTable:
    """Table of Q values 1..n; Q_n = Q_{n-Q_{n-1}} + Q_{n-Q_{n-2}}."""
    if n < 1:
        raise ValueError("n must be >= 1")
    table = MemoTable()
    for k in range(3, n + 1):
        table.append(table[k - table[k - 1]] + table[k - table[k - 2]])
    return table


def hofstadter_q(n: int) -> int:
    return hofstadter_q_table(max(n, 2))[n]


def conway_table(n: int) -> MemoTable:
    """Table of Conway values 1..n; C_n = C_{C_{n-1}} + C_{n-C_{n-1}}."""
    if n < 1:
        raise ValueError("n must be >= 1")
    table = MemoTable()
    for k in range(3, n + 1):
        table.append(table[table[k - 1]] + table[k - table[k - 1]])
    return table


def conway(n: int) -> int:
    return conway_table(max(n, 2))[n]
