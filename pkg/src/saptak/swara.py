"""The twelve swaras of a saptak, registers, tonics and Western pitch names."""

from __future__ import annotations

import math
import re
from dataclasses import dataclass

from .errors import NotOnKeyboard
from .pitch import A4_HZ, C4_HZ, PITCH_CLASSES, ets_frequency

__all__ = [
    "DEGREES",
    "Swara",
    "SWARAS",
    "SHUDDHA",
    "MADHYA",
    "MANDRA",
    "TAR",
    "register_name",
    "Tonic",
    "pitch_to_midi",
    "midi_to_pitch",
    "midi_to_hz",
    "hz_to_midi",
    "semitone_index",
    "swara_frequency",
    "western_name",
]

DEGREES = ("sa", "re", "ga", "ma", "pa", "dha", "ni")
MODIFIERS = ("shuddha", "komal", "teevra")

_SHUDDHA_SEMITONES = {"sa": 0, "re": 2, "ga": 4, "ma": 5, "pa": 7, "dha": 9, "ni": 11}
_KOMAL_OK = frozenset({"re", "ga", "dha", "ni"})


@dataclass(frozen=True)
class Swara:
    degree: str
    modifier: str = "shuddha"

    def __post_init__(self):
        if self.degree not in DEGREES:
            raise ValueError(f"unknown degree {self.degree!r}")
        if self.modifier not in MODIFIERS:
            raise ValueError(f"unknown modifier {self.modifier!r}")
        if self.modifier == "komal" and self.degree not in _KOMAL_OK:
            raise ValueError(f"{self.degree} has no komal form")
        if self.modifier == "teevra" and self.degree != "ma":
            raise ValueError(f"{self.degree} has no teevra form")

    @property
    def semitone(self) -> int:
        base = _SHUDDHA_SEMITONES[self.degree]
        if self.modifier == "komal":
            return base - 1
        if self.modifier == "teevra":
            return base + 1
        return base

    @property
    def is_shuddha(self) -> bool:
        return self.modifier == "shuddha"

    @property
    def degree_index(self) -> int:
        return DEGREES.index(self.degree)

    @classmethod
    def from_semitone(cls, semitone: int) -> "Swara":
        return SWARAS[semitone % 12]

    def __str__(self):
        if self.is_shuddha:
            return self.degree
        return f"{self.modifier} {self.degree}"


# all twelve, indexed by semitone above sa
SWARAS: tuple[Swara, ...] = (
    Swara("sa"),
    Swara("re", "komal"),
    Swara("re"),
    Swara("ga", "komal"),
    Swara("ga"),
    Swara("ma"),
    Swara("ma", "teevra"),
    Swara("pa"),
    Swara("dha", "komal"),
    Swara("dha"),
    Swara("ni", "komal"),
    Swara("ni"),
)
SHUDDHA: tuple[Swara, ...] = tuple(s for s in SWARAS if s.is_shuddha)

MANDRA, MADHYA, TAR = -1, 0, 1


def register_name(index: int) -> str:
    """``0`` is madhya, ``1`` tar, ``2`` ati-tar, ``-1`` mandra, ``-2`` ati-mandra ..."""
    if index == 0:
        return "madhya"
    base = "tar" if index > 0 else "mandra"
    return "ati-" * (abs(index) - 1) + base


def semitone_index(s: Swara) -> int:
    return s.semitone


_PITCH_RE = re.compile(
    r"^\s*([A-Ga-g])(#|b|_flat|_sharp|flat|sharp)?(-?\d+)\s*$"
)
_LETTERS = {"C": 0, "D": 2, "E": 4, "F": 5, "G": 7, "A": 9, "B": 11}


def pitch_to_midi(name: str) -> int:
    """MIDI number of a scientific pitch name such as ``"F#4"`` or ``"B_flat2"``."""
    m = _PITCH_RE.match(name)
    if m is None:
        raise ValueError(f"not a pitch name: {name!r}")
    letter, acc, octave = m.groups()
    pc = _LETTERS[letter.upper()]
    if acc in ("#", "_sharp", "sharp"):
        pc += 1
    elif acc in ("b", "_flat", "flat"):
        pc -= 1
    return pc + 12 * (int(octave) + 1)


def midi_to_pitch(midi: int) -> str:
    octave, pc = divmod(midi, 12)
    return f"{PITCH_CLASSES[pc]}{octave - 1}"


def midi_to_hz(midi: int) -> float:
    return ets_frequency(A4_HZ, midi - 69)


def hz_to_midi(freq: float, tolerance_cents: float = 1.0) -> int:
    """Nearest lattice pitch; :class:`NotOnKeyboard` if farther than the tolerance."""
    if freq <= 0:
        raise ValueError(f"frequency must be positive, got {freq}")
    exact = 69 + 12 * math.log2(freq / A4_HZ)
    nearest = round(exact)
    if abs(exact - nearest) * 100 > tolerance_cents:
        raise NotOnKeyboard(
            f"{freq} Hz is {100 * (exact - nearest):+.2f} cents from {midi_to_pitch(nearest)}"
        )
    return nearest


@dataclass(frozen=True)
class Tonic:
    """Frequency of sa in the madhya saptak."""

    sa_frequency: float = C4_HZ

    def __post_init__(self):
        if not self.sa_frequency > 0:
            raise ValueError(f"tonic must be positive, got {self.sa_frequency}")

    @classmethod
    def parse(cls, text: str) -> "Tonic":
        """Accept a frequency literal (``"261.63"``) or a pitch name (``"C4"``)."""
        try:
            return cls(float(text))
        except ValueError:
            pass
        return cls(midi_to_hz(pitch_to_midi(text)))

    @property
    def pitch_name(self) -> str:
        return midi_to_pitch(hz_to_midi(self.sa_frequency))


def swara_frequency(t: Tonic, s: Swara, register: int = MADHYA) -> float:
    return ets_frequency(t.sa_frequency, s.semitone + 12 * register)


def western_name(t: Tonic, s: Swara, register: int = MADHYA) -> str:
    """Sharps-only pitch name of a swara; the tonic must lie on the A440 lattice."""
    return midi_to_pitch(hz_to_midi(t.sa_frequency) + s.semitone + 12 * register)
