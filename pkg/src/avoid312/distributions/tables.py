"""Distribution tables, their CSV/JSON forms, and OEIS b-file cross-checks."""

from __future__ import annotations

import io
import json
from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field
from pathlib import Path

from .formulas import catalan

__all__ = [
    "DistributionTable", "read_bfile", "write_bfile", "flatten_rows",
    "BfileMismatch", "crosscheck_bfile",
]


@dataclass
class DistributionTable:
    """Rows ``n -> [a_{n,0}, ..., a_{n,kmax(n)}]`` for one pattern and method."""

    tau: str
    method: str
    rows: dict[int, list[int]] = field(default_factory=dict)

    def __setitem__(self, n: int, row: list[int]) -> None:
        if any(v < 0 for v in row):
            raise ValueError(f"row {n} has a negative entry")
        if sum(row) != catalan(n):
            raise ValueError(f"row {n} sums to {sum(row)}, expected Catalan({n}) = {catalan(n)}")
        self.rows[n] = list(row)

    def __getitem__(self, n: int) -> list[int]:
        return self.rows[n]

    def cells(self) -> Iterator[tuple[int, int, int]]:
        for n in sorted(self.rows):
            for k, v in enumerate(self.rows[n]):
                yield n, k, v

    def to_csv(self, header: bool = True) -> str:
        buf = io.StringIO()
        if header:
            buf.write("n,k,count\n")
        for n, k, v in self.cells():
            buf.write(f"{n},{k},{v}\n")
        return buf.getvalue()

    def to_json(self) -> str:
        # big integers as JSON numbers; Python's json writes them exactly
        rows = [self.rows[n] for n in sorted(self.rows)]
        return json.dumps({
            "tau": self.tau,
            "method": self.method,
            "n": sorted(self.rows),
            "rows": rows,
        })


def read_bfile(source: str | Path | Iterable[str]) -> dict[int, int]:
    """Parse OEIS b-file lines ``index value``; ``#`` comments and blanks are skipped."""
    if isinstance(source, (str, Path)):
        with open(source, encoding="utf-8") as fh:
            lines = fh.read().splitlines()
    else:
        lines = list(source)
    out: dict[int, int] = {}
    for lineno, line in enumerate(lines, start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) < 2:
            raise ValueError(f"b-file line {lineno}: expected 'index value', got {line!r}")
        out[int(parts[0])] = int(parts[1])
    return out


def flatten_rows(table: DistributionTable, offset: int = 0) -> dict[int, int]:
    """Read the triangle by rows, as OEIS does, numbering terms from ``offset``."""
    return {offset + i: v for i, (_, _, v) in enumerate(table.cells())}


def write_bfile(table: DistributionTable, offset: int = 0) -> str:
    return "".join(f"{i} {v}\n" for i, v in flatten_rows(table, offset).items())


@dataclass(frozen=True)
class BfileMismatch:
    index: int
    expected: int
    actual: int


def crosscheck_bfile(
    table: DistributionTable, bfile: dict[int, int], offset: int = 0
) -> tuple[int, list[BfileMismatch]]:
    """Compare the row-flattened table with b-file terms.

    Returns the number of terms compared and the mismatches.  Terms past the
    end of the table are not compared.
    """
    ours = flatten_rows(table, offset)
    compared = 0
    bad = []
    for index, value in sorted(bfile.items()):
        if index in ours:
            compared += 1
            if ours[index] != value:
                bad.append(BfileMismatch(index, value, ours[index]))
    return compared, bad
