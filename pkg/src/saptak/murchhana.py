"""Scale change and murchhana (grahabhedam).

A scale change moves sa and leaves the structure alone.  A murchhana
re-anchors sa on another shuddha degree and re-spells the result against the
major pattern, which yields a different thaat.  Both are computed on the
12-step tempered circle.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional, Sequence, Union

from .errors import RejectedShift, UnknownRaga
from .pitch import ets_frequency
from .swara import SWARAS, Swara, Tonic, hz_to_midi, midi_to_hz

__all__ = [
    "MAJOR",
    "THAAT_NAMES",
    "CARNATIC_NAMES",
    "Thaat",
    "Rejection",
    "major_pattern",
    "rotate_pattern",
    "pattern_to_semitones",
    "murchhana",
    "enumerate_murchhanas",
    "scale_change",
    "carnatic_name",
    "murchhana_grid",
    "murchhanas_json",
    "ScaleChangeRow",
    "scale_change_table",
]

MAJOR = (2, 2, 1, 2, 2, 2, 1)

# Hindustani names of the accepted rotations of the major pattern, by shift
THAAT_NAMES = ("Bilawal", "Kafi", "Bhairavi", "Kalyan", "Khammaj", "Asavari")
CARNATIC_NAMES = {
    "Bilawal": "Dhirashankarabaranam",
    "Kafi": "Kharaharapriya",
    "Bhairavi": "Hanumantodi",
    "Kalyan": "Mechakalyani",
    "Khammaj": "Harikamboji",
    "Asavari": "Natabhairavi",
}

PA = 7


def _check_pattern(p: Sequence[int]) -> tuple[int, ...]:
    p = tuple(int(x) for x in p)
    if len(p) != 7 or any(x not in (1, 2) for x in p) or sum(p) != 12:
        raise ValueError(f"not a seven-step T/S pattern: {p}")
    return p


def _check_shift(shift: int) -> int:
    if not isinstance(shift, int) or isinstance(shift, bool) or not 0 <= shift <= 6:
        raise ValueError(f"shift must be an integer in 0..6, got {shift!r}")
    return shift


def major_pattern() -> tuple[int, ...]:
    """``T T S T T T S`` in semitones."""
    return MAJOR


def rotate_pattern(p: Sequence[int], shift: int) -> tuple[int, ...]:
    p = _check_pattern(p)
    shift = _check_shift(shift)
    return p[shift:] + p[:shift]


def pattern_to_semitones(p: Sequence[int]) -> tuple[int, ...]:
    """Semitone of each of the seven degrees, starting from 0."""
    p = _check_pattern(p)
    out = [0]
    for step in p[:-1]:
        out.append(out[-1] + step)
    return tuple(out)


@dataclass(frozen=True)
class Thaat:
    degrees: tuple[Swara, ...]
    shift: int = 0
    hindustani_name: Optional[str] = None
    carnatic_name: Optional[str] = None

    accepted = True

    def __post_init__(self):
        semis = [s.semitone for s in self.degrees]
        if len(semis) != 7 or semis[0] != 0:
            raise ValueError("a thaat has seven degrees starting on sa")
        if any(b <= a for a, b in zip(semis, semis[1:])):
            raise ValueError("thaat degrees must ascend")

    @property
    def semitones(self) -> tuple[int, ...]:
        return tuple(s.semitone for s in self.degrees)

    @property
    def vikrita(self) -> tuple[Swara, ...]:
        return tuple(s for s in self.degrees if not s.is_shuddha)

    @property
    def pattern(self) -> tuple[int, ...]:
        semis = self.semitones + (12,)
        return tuple(b - a for a, b in zip(semis, semis[1:]))

    @property
    def name(self) -> Optional[str]:
        return self.hindustani_name


@dataclass(frozen=True)
class Rejection:
    """A rotation that loses pa; ``displaced`` is the swara sitting in its place."""

    shift: int
    displaced: Swara

    accepted = False

    @property
    def reason(self) -> str:
        return f"pa is displaced by {self.displaced}"


def _rotated_set(pattern: Sequence[int], shift: int) -> list[int]:
    semis = pattern_to_semitones(pattern)
    anchor = semis[shift]
    return sorted((x - anchor) % 12 for x in semis)


def murchhana(shift: int, pattern: Sequence[int] = MAJOR) -> Thaat:
    """Re-anchor sa on degree ``shift`` of ``pattern`` and spell the new thaat.

    Raises :class:`RejectedShift` when the rotation has no pa.
    """
    shift = _check_shift(shift)
    pattern = _check_pattern(pattern)
    rotated = _rotated_set(pattern, shift)
    if PA not in rotated:
        raise RejectedShift(shift, SWARAS[rotated[4]])
    degrees = tuple(SWARAS[x] for x in rotated)
    if pattern == MAJOR:
        name = THAAT_NAMES[shift]
        return Thaat(degrees, shift, name, CARNATIC_NAMES[name])
    return Thaat(degrees, shift)


def enumerate_murchhanas(pattern: Sequence[int] = MAJOR) -> list[Union[Thaat, Rejection]]:
    out = []
    for shift in range(7):
        try:
            out.append(murchhana(shift, pattern))
        except RejectedShift as exc:
            out.append(Rejection(exc.shift, exc.displaced))
    return out


def scale_change(t: Tonic, steps: int) -> Tonic:
    return Tonic(ets_frequency(t.sa_frequency, steps))


def carnatic_name(hindustani: str) -> str:
    for name, carnatic in CARNATIC_NAMES.items():
        if name.lower() == hindustani.strip().lower():
            return carnatic
    raise UnknownRaga(hindustani)


_GRID_LABELS = ("sa", "re", "ga", "ma", "pa", "dha", "ni", "sa'")
_GRID_SLOTS = 14


def murchhana_grid(outcomes: Optional[Sequence[Union[Thaat, Rejection]]] = None) -> str:
    """Text grid: one row per shift, the saptak slid right by ``shift`` slots."""
    if outcomes is None:
        outcomes = enumerate_murchhanas()
    names = [o.hindustani_name if o.accepted and o.hindustani_name else "----" for o in outcomes]
    name_w = max(len(n) for n in names)
    lines = []
    for name, o in zip(names, outcomes):
        cells = ["*"] * _GRID_SLOTS
        cells[o.shift : o.shift + len(_GRID_LABELS)] = _GRID_LABELS
        lines.append(" ".join([name.ljust(name_w)] + [c.ljust(3) for c in cells]).rstrip())
    return "\n".join(lines) + "\n"


def outcome_dict(o: Union[Thaat, Rejection]) -> dict:
    if o.accepted:
        return {
            "shift": o.shift,
            "accepted": True,
            "hindustani_name": o.hindustani_name,
            "carnatic_name": o.carnatic_name,
            "degrees": [str(s) for s in o.degrees],
            "vikrita": [str(s) for s in o.vikrita],
            "rejection_reason": None,
        }
    return {
        "shift": o.shift,
        "accepted": False,
        "hindustani_name": None,
        "carnatic_name": None,
        "degrees": None,
        "vikrita": None,
        "rejection_reason": o.reason,
    }


def murchhanas_json(outcomes: Optional[Sequence[Union[Thaat, Rejection]]] = None) -> str:
    if outcomes is None:
        outcomes = enumerate_murchhanas()
    return json.dumps([outcome_dict(o) for o in outcomes], indent=2)


@dataclass(frozen=True)
class ScaleChangeRow:
    midi: int
    hz: float
    # (swara, register) for each column, None where the column has no note
    cells: tuple[Optional[tuple[Swara, int]], ...]


def scale_change_table(
    tonics: Sequence[Tonic],
    low: int,
    high: int,
    spans: Optional[Sequence[tuple[int, int]]] = None,
) -> list[ScaleChangeRow]:
    """Align several tonics against the keyboard from MIDI ``low`` to ``high``.

    ``spans`` gives the lowest and highest register shown for each column
    (default madhya only); the sa closing the top register is always shown.
    """
    if spans is None:
        spans = [(0, 0)] * len(tonics)
    anchors = [hz_to_midi(t.sa_frequency) for t in tonics]
    rows = []
    for midi in range(low, high + 1):
        cells = []
        for anchor, (lo, hi) in zip(anchors, spans):
            pos = midi - anchor
            if 12 * lo <= pos <= 12 * (hi + 1):
                register, semi = divmod(pos, 12)
                cells.append((SWARAS[semi], register))
            else:
                cells.append(None)
        rows.append(ScaleChangeRow(midi, midi_to_hz(midi), tuple(cells)))
    return rows
