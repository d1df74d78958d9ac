"""Reading and writing point files.

Format (UTF-8): an optional header line ``B:x_lo,y_lo,x_hi,y_hi`` followed by
one ``x,y`` integer pair per line. Blank lines and lines starting with ``#``
are ignored. Query files use the same pair format without a header.
"""

from __future__ import annotations

from pathlib import Path

from .geometry import PointSet, ValidationError, normalize_point_set


class ParseError(ValueError):
    """Malformed input file; the message carries the line number."""

    def __init__(self, source: str, lineno: int, message: str):
        super().__init__(f"{source}:{lineno}: {message}")
        self.source = source
        self.lineno = lineno


def _ints(text: str, count: int, source: str, lineno: int) -> tuple[int, ...]:
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != count:
        raise ParseError(source, lineno, f"expected {count} comma-separated integers, got {text!r}")
    try:
        return tuple(int(p) for p in parts)
    except ValueError:
        raise ParseError(source, lineno, f"not an integer in {text!r}") from None


def parse_bounds(text: str, source: str = "<bounds>", lineno: int = 1) -> tuple[int, int, int, int]:
    return _ints(text, 4, source, lineno)


def _lines(text: str):
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if line and not line.startswith("#"):
            yield lineno, line


def parse_pairs(text: str, source: str = "<queries>") -> list[tuple[int, int]]:
    return [_ints(line, 2, source, lineno) for lineno, line in _lines(text)]


def parse_points(text: str, bounds=None, source: str = "<points>") -> PointSet:
    """PointSet from point-file text; ``bounds`` overrides the header."""
    header = None
    coords = []
    for lineno, line in _lines(text):
        if line.startswith("B:"):
            if header is not None or coords:
                raise ParseError(source, lineno, "bounds header must come first and only once")
            header = parse_bounds(line[2:], source, lineno)
            continue
        coords.append(_ints(line, 2, source, lineno))
    if bounds is None:
        bounds = header
    if bounds is None:
        raise ParseError(source, 1, "no bounds header and no bounds given")
    try:
        return normalize_point_set(coords, bounds)
    except ValidationError as exc:
        raise ValidationError(f"{source}: {exc}") from None


def format_points(ps: PointSet) -> str:
    b = ps.bounds
    out = [f"B:{b.x_lo},{b.y_lo},{b.x_hi},{b.y_hi}"]
    out.extend(f"{p.x},{p.y}" for p in ps.points)
    return "\n".join(out) + "\n"


def read_points(path, bounds=None) -> PointSet:
    path = Path(path)
    return parse_points(path.read_text(encoding="utf-8"), bounds, str(path))


def write_points(path, ps: PointSet) -> None:
    Path(path).write_text(format_points(ps), encoding="utf-8")


def read_pairs(path) -> list[tuple[int, int]]:
    path = Path(path)
    return parse_pairs(path.read_text(encoding="utf-8"), str(path))
