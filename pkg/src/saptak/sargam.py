"""Plain-text sargam melodies.

One token per event, separated by whitespace::

    @tonic C4          # optional header: pitch name or Hz
    s r G m:2 p' d, -:1/2 N''

Lowercase ``s r g m p d n`` are shuddha swaras, ``R G D N`` komal and ``M``
teevra ma.  Each ``'`` raises the note a saptak and each ``,`` lowers it.
``-`` is a rest.  ``:n`` or ``:n/d`` gives a duration in beats (default 1).
``#`` (at line start or after a space) comments to the end of the line.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .errors import DomainError, ParseError
from .murchhana import murchhana, scale_change
from .swara import (
    SHUDDHA,
    Swara,
    Tonic,
    hz_to_midi,
    midi_to_hz,
    midi_to_pitch,
    pitch_to_midi,
    swara_frequency,
)

__all__ = [
    "MelodyEvent",
    "Melody",
    "parse_melody",
    "format_melody",
    "note_token",
    "transpose_melody",
    "event_frequencies",
]

_LETTER_TO_SWARA = {
    "s": Swara("sa"),
    "r": Swara("re"),
    "g": Swara("ga"),
    "m": Swara("ma"),
    "p": Swara("pa"),
    "d": Swara("dha"),
    "n": Swara("ni"),
    "R": Swara("re", "komal"),
    "G": Swara("ga", "komal"),
    "D": Swara("dha", "komal"),
    "N": Swara("ni", "komal"),
    "M": Swara("ma", "teevra"),
}
_SWARA_TO_LETTER = {v: k for k, v in _LETTER_TO_SWARA.items()}

# '#' opens a comment only at line start or after whitespace, so "A#2" survives
_COMMENT_RE = re.compile(r"(?:^|\s)#.*$")
_TOKEN_RE = re.compile(r"^(?:(-)|([srgmpdnRGDNM])([',]*))(?::(\d+)(?:/(\d+))?)?$")


@dataclass(frozen=True)
class MelodyEvent:
    swara: Optional[Swara] = None
    register: int = 0
    beats: Fraction = Fraction(1)

    def __post_init__(self):
        object.__setattr__(self, "beats", Fraction(self.beats))
        if self.beats <= 0:
            raise ValueError(f"beats must be positive, got {self.beats}")
        if self.swara is None and self.register != 0:
            raise ValueError("a rest has no register")

    @property
    def kind(self) -> str:
        return "rest" if self.swara is None else "note"

    @property
    def is_rest(self) -> bool:
        return self.swara is None

    @classmethod
    def rest(cls, beats=1) -> "MelodyEvent":
        return cls(None, 0, beats)


@dataclass(frozen=True)
class Melody:
    events: tuple[MelodyEvent, ...]
    tonic: Tonic = field(default_factory=Tonic)

    def __post_init__(self):
        object.__setattr__(self, "events", tuple(self.events))

    @property
    def total_beats(self) -> Fraction:
        return sum((e.beats for e in self.events), Fraction(0))


def _parse_token(index: int, token: str) -> MelodyEvent:
    m = _TOKEN_RE.match(token)
    if m is None:
        raise ParseError(index, token)
    rest, letter, marks, num, den = m.groups()
    beats = Fraction(1)
    if num is not None:
        if int(num) == 0 or (den is not None and int(den) == 0):
            raise ParseError(index, token, "duration must be a positive ratio")
        beats = Fraction(int(num), int(den) if den is not None else 1)
    if rest:
        return MelodyEvent.rest(beats)
    register = marks.count("'") - marks.count(",")
    return MelodyEvent(_LETTER_TO_SWARA[letter], register, beats)


def parse_melody(text: str) -> Melody:
    tonic = Tonic()
    tokens = []
    seen_content = False
    for line in text.splitlines():
        line = _COMMENT_RE.sub("", line).strip()
        if not line:
            continue
        if not seen_content and line.startswith("@"):
            seen_content = True
            parts = line.split()
            if parts[0] != "@tonic" or len(parts) != 2:
                raise ParseError(0, line, "header must be '@tonic <pitch-or-Hz>'")
            try:
                tonic = Tonic.parse(parts[1])
            except ValueError as exc:
                raise ParseError(0, parts[1], f"bad tonic: {exc}") from None
            continue
        seen_content = True
        tokens.extend(line.split())
    if not tokens:
        raise ParseError(1, "", "melody has no events")
    events = tuple(_parse_token(i, tok) for i, tok in enumerate(tokens, start=1))
    return Melody(events, tonic)


def note_token(swara: Optional[Swara], register: int = 0, beats=1) -> str:
    if swara is None:
        head = "-"
    else:
        head = _SWARA_TO_LETTER[swara] + ("'" * register if register > 0 else "," * -register)
    beats = Fraction(beats)
    if beats == 1:
        return head
    return f"{head}:{beats.numerator}" + (f"/{beats.denominator}" if beats.denominator != 1 else "")


def _tonic_text(t: Tonic) -> str:
    try:
        name = midi_to_pitch(hz_to_midi(t.sa_frequency))
        if midi_to_hz(pitch_to_midi(name)) == t.sa_frequency:
            return name
    except ValueError:
        pass
    return repr(t.sa_frequency)


def format_melody(m: Melody) -> str:
    """Canonical text; the tonic header is written only when it is not the default."""
    body = " ".join(note_token(e.swara, e.register, e.beats) for e in m.events)
    if m.tonic == Tonic():
        return body
    return f"@tonic {_tonic_text(m.tonic)}\n{body}"


def transpose_melody(m: Melody, mode: str, shift: int) -> Melody:
    """Apply a scale change (``shift`` semitones) or a murchhana (``shift`` degrees).

    A murchhana moves sa to the ``shift``-th shuddha degree and re-spells
    every note against the resulting thaat: degree ``i`` of the melody
    becomes degree ``i`` of the thaat.  Only shuddha notes have an image.
    """
    if mode == "scale-change":
        return Melody(m.events, scale_change(m.tonic, shift))
    if mode != "murchhana":
        raise ValueError(f"unknown transposition mode {mode!r}")
    thaat = murchhana(shift)
    events = []
    for i, e in enumerate(m.events, start=1):
        if e.is_rest:
            events.append(e)
            continue
        if not e.swara.is_shuddha:
            raise DomainError(
                f"event {i} ({note_token(e.swara, e.register)}): "
                "only shuddha swaras can be carried through a murchhana"
            )
        events.append(MelodyEvent(thaat.degrees[e.swara.degree_index], e.register, e.beats))
    new_tonic = Tonic(swara_frequency(m.tonic, SHUDDHA[shift]))
    return Melody(tuple(events), new_tonic)


def event_frequencies(m: Melody) -> list[Optional[float]]:
    """Realised Hz of each event (None for rests)."""
    return [None if e.is_rest else swara_frequency(m.tonic, e.swara, e.register) for e in m.events]
