"""Design files and the CSV renderings used by the command line.

Design file::

    # comment
    n k b
    i1 i2 ... ik      (b lines, ascending 1-based points)

With ``rows_as_vectors`` the rows may have any length (an all-zero row is
written ``-``) and the ``k`` field of the header is not enforced.
"""

from __future__ import annotations

from collections import Counter
from pathlib import Path

from .boolfn import BooleanFunction, mask_points
from .design import IncidenceStructure


class DesignFormatError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def _ints(line: str, lineno: int) -> list[int]:
    try:
        return [int(tok) for tok in line.split()]
    except ValueError:
        raise DesignFormatError(f"expected integers, got {line!r}", lineno) from None


def _parse_rows(text: str, rows_as_vectors: bool):
    lines = _content_lines(text)
    try:
        lineno, header = next(lines)
    except StopIteration:
        raise DesignFormatError("empty file: missing 'n k b' header") from None
    fields = _ints(header, lineno)
    if len(fields) != 3:
        raise DesignFormatError(f"header must be 'n k b', got {header!r}", lineno)
    n, k, b = fields
    if not 1 <= n <= 64:
        raise DesignFormatError(f"n={n} outside [1, 64]", lineno)
    if b < 1:
        raise DesignFormatError(f"b={b} must be positive", lineno)
    if not rows_as_vectors and not 1 <= k <= n:
        raise DesignFormatError(f"k={k} outside [1, {n}]", lineno)
    masks = []
    seen: dict[int, int] = {}
    last = lineno
    for lineno, line in lines:
        last = lineno
        if len(masks) == b:
            raise DesignFormatError(f"more than b={b} rows", lineno)
        pts = [] if rows_as_vectors and line == "-" else _ints(line, lineno)
        if not rows_as_vectors and len(pts) != k:
            raise DesignFormatError(f"block has {len(pts)} points, expected k={k}", lineno)
        if any(p < 1 or p > n for p in pts):
            raise DesignFormatError(f"point outside [1, {n}] in {line!r}", lineno)
        if any(a >= c for a, c in zip(pts, pts[1:])):
            raise DesignFormatError(f"points must be strictly ascending: {line!r}", lineno)
        m = sum(1 << (p - 1) for p in pts)
        if m in seen:
            raise DesignFormatError(f"repeats the row on line {seen[m]}", lineno)
        seen[m] = lineno
        masks.append(m)
    if len(masks) != b:
        raise DesignFormatError(f"found {len(masks)} rows, header says b={b}", last)
    return n, k, masks


def parse_design(text: str) -> IncidenceStructure:
    n, k, masks = _parse_rows(text, rows_as_vectors=False)
    return IncidenceStructure(n, k, tuple(masks))


def parse_vectors(text: str) -> BooleanFunction:
    """Rows of a binary array, as the support of a Boolean function."""
    n, _, masks = _parse_rows(text, rows_as_vectors=True)
    return BooleanFunction(n, frozenset(masks))


def render_design(D: IncidenceStructure) -> str:
    lines = [f"{D.n} {D.k} {D.b}"]
    lines += [" ".join(map(str, mask_points(B))) for B in D.blocks]
    return "\n".join(lines) + "\n"


def render_vectors(f: BooleanFunction) -> str:
    lines = [f"{f.n} 0 {f.weight}"]
    lines += [" ".join(map(str, mask_points(m))) or "-" for m in sorted(f.support)]
    return "\n".join(lines) + "\n"


def read_design(path: str | Path) -> IncidenceStructure:
    return parse_design(Path(path).read_text())


def read_vectors(path: str | Path) -> BooleanFunction:
    return parse_vectors(Path(path).read_text())


def write_design(path: str | Path, D: IncidenceStructure) -> None:
    Path(path).write_text(render_design(D))


def spectrum_csv(by_weight: dict[int, Counter]) -> str:
    rows = ["weight,value,multiplicity"]
    for h in sorted(by_weight):
        for value, mult in sorted(by_weight[h].items()):
            rows.append(f"{h},{value},{mult}")
    return "\n".join(rows) + "\n"


def weight_distribution_csv(counts: dict[int, int]) -> str:
    rows = ["weight,count"] + [f"{w},{c}" for w, c in sorted(counts.items())]
    return "\n".join(rows) + "\n"


def parse_spectrum_csv(text: str) -> dict[int, Counter]:
    lines = text.strip().splitlines()
    if lines[0] != "weight,value,multiplicity":
        raise ValueError(f"unexpected header {lines[0]!r}")
    out: dict[int, Counter] = {}
    for line in lines[1:]:
        h, v, m = map(int, line.split(","))
        out.setdefault(h, Counter())[v] += m
    return out
