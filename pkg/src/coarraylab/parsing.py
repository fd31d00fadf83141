"""Parsers for the two array input formats: explicit positions and IES notation.

Both parsers accept the loose formatting people paste from papers and MATLAB
sessions: commas and/or whitespace between items, optional wrapping brackets
or braces. Every rejection carries the character offset of the offending
token so front ends can anchor error messages.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .core import MAX_APERTURE, MAX_SENSORS, ResourceLimitError, SensorArray

PARSE_ERROR_KINDS = frozenset(
    {
        "empty-input",
        "bad-token",
        "non-integer",
        "duplicate-position",
        "zero-spacing",
        "resource-limit",
    }
)


class ParseError(ValueError):
    """Input rejection with a machine-readable kind and character offset."""

    def __init__(self, kind: str, position: int, message: str):
        if kind not in PARSE_ERROR_KINDS:
            raise ValueError(f"unknown parse error kind {kind!r}")
        super().__init__(message)
        self.kind = kind
        self.position = position
        self.message = message


@dataclass(frozen=True)
class IesSpec:
    """Inter-element spacing terms, each a (spacing, repeat) pair."""

    terms: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if not self.terms:
            raise ValueError("IES spec needs at least one term")
        for spacing, repeat in self.terms:
            if spacing < 1 or repeat < 1:
                raise ValueError(
                    f"IES term ({spacing}, {repeat}) needs spacing and repeat >= 1"
                )

    def spacings(self) -> list[int]:
        """Expanded list of consecutive gaps (length N - 1)."""
        out: list[int] = []
        for spacing, repeat in self.terms:
            out.extend([spacing] * repeat)
        return out

    @property
    def sensor_count(self) -> int:
        return sum(repeat for _, repeat in self.terms) + 1


# Positions: integers separated by commas/whitespace; [], {} tolerated.
_POSITION_TOKEN = re.compile(r"[^\s,\[\]{}]+")
_INT_TOKEN = re.compile(r"[+-]?\d+\Z")

# IES terms, tried in order at each cursor position. The ones(1, r) forms
# mirror the MATLAB vectors used in the literature and tolerate internal
# whitespace, e.g. "2*ones (1, 7)".
_IES_SEPARATOR = re.compile(r"[\s,\[\]{}]+")
_IES_TERM_PATTERNS = (
    re.compile(r"(?:(?P<mult>\d+)\s*\*\s*)?ones\s*\(\s*1\s*,\s*(?P<reps>\d+)\s*\)"),
    re.compile(r"(?P<base>\d+)\s*\^\s*(?P<exp>\d+)"),
    re.compile(r"(?P<plain>\d+)"),
)


def parse_positions(text: str) -> SensorArray:
    """Parse explicit sensor positions into a canonical SensorArray.

    Accepts integers in any order (the result is sorted), negative values,
    and optional surrounding brackets. Raises ParseError on anything else.
    """
    values: list[int] = []
    seen: dict[int, int] = {}
    found = False
    for match in _POSITION_TOKEN.finditer(text):
        found = True
        token = match.group()
        offset = match.start()
        if not _INT_TOKEN.match(token):
            kind = "bad-token"
            message = f"unrecognized token {token!r}"
            try:
                float(token)
            except ValueError:
                pass
            else:
                kind = "non-integer"
                message = f"position {token!r} is not an integer"
            raise ParseError(kind, offset, message)
        value = int(token)
        if value in seen:
            raise ParseError(
                "duplicate-position", offset, f"duplicate sensor position {value}"
            )
        seen[value] = offset
        values.append(value)
    if not found:
        raise ParseError("empty-input", 0, "no sensor positions given")
    try:
        return SensorArray.from_positions(values)
    except ResourceLimitError as exc:
        raise ParseError("resource-limit", 0, str(exc)) from exc


def parse_ies(text: str) -> IesSpec:
    """Parse IES notation into an IesSpec, preserving term order.

    Grammar (terms separated by commas/whitespace):
        term := INT | INT "^" INT | INT "*ones(1," INT ")" | "ones(1," INT ")"
    "k^r" and "k*ones(1,r)" both mean spacing k repeated r times.
    """
    terms: list[tuple[int, int]] = []
    cursor = 0
    length = len(text)
    while cursor < length:
        sep = _IES_SEPARATOR.match(text, cursor)
        if sep:
            cursor = sep.end()
            continue
        term = _match_ies_term(text, cursor)
        if term is None:
            raise ParseError(
                "bad-token", cursor, f"unrecognized token {text[cursor:cursor + 12]!r}"
            )
        spacing, repeat, end = term
        if spacing < 1 or repeat < 1:
            raise ParseError(
                "zero-spacing",
                cursor,
                f"spacing {spacing} repeated {repeat} times: both must be >= 1",
            )
        if end < length and not _IES_SEPARATOR.match(text, end):
            raise ParseError(
                "bad-token", end, f"unexpected character {text[end]!r} after term"
            )
        terms.append((spacing, repeat))
        cursor = end
    if not terms:
        raise ParseError("empty-input", 0, "no IES terms given")
    return IesSpec(tuple(terms))


def _match_ies_term(text: str, pos: int) -> tuple[int, int, int] | None:
    """Try each term form at pos; return (spacing, repeat, end) or None."""
    ones, power, plain = _IES_TERM_PATTERNS
    m = ones.match(text, pos)
    if m:
        spacing = int(m.group("mult")) if m.group("mult") else 1
        return spacing, int(m.group("reps")), m.end()
    m = power.match(text, pos)
    if m:
        return int(m.group("base")), int(m.group("exp")), m.end()
    m = plain.match(text, pos)
    if m:
        return int(m.group("plain")), 1, m.end()
    return None


def ies_to_positions(spec: IesSpec) -> SensorArray:
    """Expand IES terms into sensor positions: first at 0, then running sums."""
    # Check bounds before expansion so a pathological repeat count fails fast.
    count = spec.sensor_count
    if count > MAX_SENSORS:
        raise ResourceLimitError(f"{count} sensors exceeds the limit of {MAX_SENSORS}")
    aperture = sum(spacing * repeat for spacing, repeat in spec.terms)
    if aperture > MAX_APERTURE:
        raise ResourceLimitError(
            f"aperture {aperture} exceeds the limit of {MAX_APERTURE}"
        )
    positions = [0]
    for spacing in spec.spacings():
        positions.append(positions[-1] + spacing)
    return SensorArray.from_positions(positions)


def parse_array(text: str, input_format: str) -> SensorArray:
    """Dispatch on input format ("positions" or "ies") and return the array.

    Resource-limit failures during IES expansion surface as ParseError so
    callers see a single exception type with a kind and offset.
    """
    if input_format == "positions":
        return parse_positions(text)
    if input_format == "ies":
        spec = parse_ies(text)
        try:
            return ies_to_positions(spec)
        except ResourceLimitError as exc:
            raise ParseError("resource-limit", 0, str(exc)) from exc
    raise ValueError(f"unknown input format {input_format!r}")


def ies_from_gaps(array) -> IesSpec:
    """Run-length encode the consecutive gaps of an array into an IesSpec."""
    sa = array if isinstance(array, SensorArray) else SensorArray.from_positions(array)
    gaps = [b - a for a, b in zip(sa.positions, sa.positions[1:])]
    if not gaps:
        raise ValueError("IES notation needs at least two sensors")
    terms: list[tuple[int, int]] = []
    for gap in gaps:
        if terms and terms[-1][0] == gap:
            terms[-1] = (gap, terms[-1][1] + 1)
        else:
            terms.append((gap, 1))
    return IesSpec(tuple(terms))


def format_ies(spec: IesSpec) -> str:
    """Render an IesSpec as parseable text, e.g. "1, 1, 2^6"."""
    parts = []
    for spacing, repeat in spec.terms:
        parts.append(f"{spacing}^{repeat}" if repeat > 1 else f"{spacing}")
    return ", ".join(parts)


def format_positions(array) -> str:
    """Render positions as parseable comma-separated text."""
    sa = array if isinstance(array, SensorArray) else SensorArray.from_positions(array)
    return ", ".join(str(p) for p in sa.positions)
