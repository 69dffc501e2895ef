"""Exact just-intonation ratios, tempered pitch, and the shruti table.

Ratios are :class:`fractions.Fraction` values, so they always sit in lowest
terms and compose exactly.  Frequencies are plain floats and only appear at
the boundary, when a ratio is applied to a base frequency.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

__all__ = [
    "A4_HZ",
    "C4_HZ",
    "ShrutiEntry",
    "SHRUTIS",
    "ShrutiRow",
    "as_ratio",
    "ratio_to_cents",
    "just_frequency",
    "ets_frequency",
    "deviation_cents",
    "nearest_step",
    "shruti_table",
    "shruti_table_csv",
    "shruti_table_json",
]

A4_HZ = 440.0

PITCH_CLASSES = ("C", "C#", "D", "D#", "E", "F", "F#", "G", "G#", "A", "A#", "B")

RatioLike = Union[Fraction, int, str]


def as_ratio(r: RatioLike) -> Fraction:
    """Coerce ``r`` to a positive :class:`Fraction` (``"9/8"`` and ``3`` both work)."""
    if isinstance(r, float):
        raise TypeError("ratios must be exact; pass a Fraction, int or 'n/d' string")
    ratio = Fraction(r)
    if ratio <= 0:
        raise ValueError(f"ratio must be positive, got {ratio}")
    return ratio


def ratio_to_cents(r: RatioLike) -> float:
    ratio = as_ratio(r)
    # log of numerator and denominator separately keeps large terms exact
    return 1200.0 * (math.log2(ratio.numerator) - math.log2(ratio.denominator))


def just_frequency(base: float, r: RatioLike) -> float:
    if base <= 0:
        raise ValueError(f"base frequency must be positive, got {base}")
    ratio = as_ratio(r)
    return base * ratio.numerator / ratio.denominator


def ets_frequency(ref: float, steps: int) -> float:
    """Frequency ``steps`` equal-tempered semitones away from ``ref``."""
    if ref <= 0:
        raise ValueError(f"reference frequency must be positive, got {ref}")
    octaves, rem = divmod(int(steps), 12)
    # whole octaves as exact powers of two so that octave shifts are exact
    return math.ldexp(ref * 2.0 ** (rem / 12), octaves)


# tempered C4 on the A440 lattice (261.6256 Hz to four places); default sa
C4_HZ = ets_frequency(A4_HZ, -9)


def deviation_cents(r: RatioLike, steps: int) -> float:
    """How far the just ratio ``r`` lies above the tempered semitone ``steps``."""
    return ratio_to_cents(r) - 100.0 * steps


def nearest_step(r: RatioLike) -> int:
    return round(ratio_to_cents(r) / 100.0)


@dataclass(frozen=True)
class ShrutiEntry:
    name: str
    ratio: Fraction
    swara_label: Optional[str] = None
    # semitone of the tempered note printed on the same row, if any
    ets_steps: Optional[int] = None

    @property
    def western_note(self) -> Optional[str]:
        if self.ets_steps is None:
            return None
        return PITCH_CLASSES[self.ets_steps % 12]


def _entry(name, ratio, label=None, steps=None):
    return ShrutiEntry(name, Fraction(ratio), label, steps)


# Rows exactly as tabulated: 21 entries, both Chandovati endpoints included.
SHRUTIS: tuple[ShrutiEntry, ...] = (
    _entry("Chandovati", "1", "sa", 0),
    _entry("Dayavati", "256/243", None, 1),
    _entry("Ranjani", "16/15"),
    _entry("Ratika", "10/9"),
    _entry("Raudri", "9/8", "re", 2),
    _entry("Krodha", "32/27", None, 3),
    _entry("Vajrika", "6/5"),
    _entry("Prasarini", "5/4", "ga", 4),
    _entry("Marjani", "4/3", "ma", 5),
    _entry("Rakta", "45/32", None, 6),
    _entry("Sandipani", "729/512"),
    _entry("Alapini", "3/2", "pa", 7),
    _entry("Madanti", "128/81", None, 8),
    _entry("Rohini", "8/5"),
    _entry("Ramya", "5/3", "dha", 9),
    _entry("Ugra", "27/16"),
    _entry("Ksobhini", "16/9", None, 10),
    _entry("Tivra", "9/5"),
    _entry("Kumudvati", "15/8", "ni", 11),
    _entry("Manda", "243/128"),
    _entry("Chandovati", "2", "sa'", 12),
)


@dataclass(frozen=True)
class ShrutiRow:
    entry: ShrutiEntry
    just_hz: float
    ets_hz: Optional[float]
    deviation_cents: float

    def as_dict(self) -> dict:
        e = self.entry
        return {
            "name": e.name,
            "ratio": str(e.ratio),
            "num": e.ratio.numerator,
            "den": e.ratio.denominator,
            "just_hz": round(self.just_hz, 4),
            "western_note": e.western_note,
            "ets_hz": None if self.ets_hz is None else round(self.ets_hz, 4),
            "deviation_cents": round(self.deviation_cents, 4),
        }


def shruti_table(base: float = C4_HZ) -> list[ShrutiRow]:
    """Realise every shruti on ``base`` (the frequency of sa).

    The tempered column is reckoned from the same ``base``.  Rows with no
    printed Western note are compared against the nearest tempered step.
    """
    rows = []
    for e in SHRUTIS:
        steps = e.ets_steps if e.ets_steps is not None else nearest_step(e.ratio)
        ets = None if e.ets_steps is None else ets_frequency(base, e.ets_steps)
        rows.append(
            ShrutiRow(e, just_frequency(base, e.ratio), ets, deviation_cents(e.ratio, steps))
        )
    return rows


CSV_FIELDS = (
    "name",
    "ratio",
    "num",
    "den",
    "just_hz",
    "western_note",
    "ets_hz",
    "deviation_cents",
)


def shruti_table_csv(base: float = C4_HZ) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_FIELDS)
    for row in shruti_table(base):
        e = row.entry
        writer.writerow(
            [
                e.name,
                str(e.ratio),
                e.ratio.numerator,
                e.ratio.denominator,
                f"{row.just_hz:.4f}",
                e.western_note or "",
                "" if row.ets_hz is None else f"{row.ets_hz:.4f}",
                f"{row.deviation_cents:.4f}",
            ]
        )
    return buf.getvalue()


def shruti_table_json(base: float = C4_HZ) -> str:
    return json.dumps([row.as_dict() for row in shruti_table(base)], indent=2)
