"""Sine-tone rendering of scales and melodies to 16-bit mono WAV."""

from __future__ import annotations

import math
import wave
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Union

import numpy as np

from .errors import AliasError
from .sargam import Melody, event_frequencies

__all__ = ["RenderConfig", "render_tone", "render_melody", "to_pcm16", "write_wav"]


@dataclass(frozen=True)
class RenderConfig:
    sample_rate: int = 44100
    amplitude: float = 0.5
    note_seconds: float = 0.5  # per beat
    fade_ms: float = 10.0

    def __post_init__(self):
        if self.sample_rate < 8000:
            raise ValueError(f"sample_rate must be >= 8000, got {self.sample_rate}")
        if not 0 < self.amplitude <= 1:
            raise ValueError(f"amplitude must be in (0, 1], got {self.amplitude}")
        if not self.note_seconds > 0:
            raise ValueError(f"note_seconds must be positive, got {self.note_seconds}")
        if self.fade_ms < 0 or 2 * self.fade_ms >= 1000 * self.note_seconds:
            raise ValueError("fades must fit inside one beat (2 * fade_ms < note length)")


def _seconds(cfg: RenderConfig) -> Fraction:
    # shortest decimal form, so 0.4 s is 2/5 rather than its binary neighbour
    return Fraction(repr(float(cfg.note_seconds)))


def _tone(freq: float, n: int, cfg: RenderConfig) -> np.ndarray:
    if not 0 < freq < cfg.sample_rate / 2:
        raise AliasError(
            f"{freq} Hz is outside (0, {cfg.sample_rate / 2}) for rate {cfg.sample_rate}"
        )
    t = np.arange(n) / cfg.sample_rate
    out = cfg.amplitude * np.sin(2 * np.pi * freq * t)
    ramp = int(round(cfg.fade_ms * cfg.sample_rate / 1000))
    if ramp:
        if 2 * ramp >= n:
            raise ValueError(f"a {n}-sample note is too short for {cfg.fade_ms} ms fades")
        env = np.linspace(0.0, 1.0, ramp, endpoint=False)
        out[:ramp] *= env
        out[n - ramp :] *= env[::-1]
    return out


def render_tone(freq: float, cfg: RenderConfig = RenderConfig(), beats=1) -> np.ndarray:
    """One sine note of ``beats`` beats with linear fade-in and fade-out."""
    n = math.ceil(Fraction(beats) * _seconds(cfg) * cfg.sample_rate)
    return _tone(freq, n, cfg)


def render_melody(m: Melody, cfg: RenderConfig = RenderConfig()) -> np.ndarray:
    """Concatenate one tone per note, silence per rest.

    Segment boundaries are taken from the running beat count so the total
    length is ``ceil(total_beats * note_seconds * sample_rate)`` exactly.
    """
    per_beat = _seconds(cfg) * cfg.sample_rate
    freqs = event_frequencies(m)
    for f in freqs:
        if f is not None and f >= cfg.sample_rate / 2:
            raise AliasError(f"{f} Hz is at or above Nyquist for rate {cfg.sample_rate}")
    edges = [0]
    elapsed = Fraction(0)
    for e in m.events:
        elapsed += e.beats
        edges.append(math.ceil(elapsed * per_beat))
    out = np.zeros(edges[-1])
    for f, start, stop in zip(freqs, edges, edges[1:]):
        if f is not None:
            out[start:stop] = _tone(f, stop - start, cfg)
    return out


def to_pcm16(buffer: np.ndarray) -> np.ndarray:
    return np.round(np.clip(buffer, -1.0, 1.0) * 32767).astype("<i2")


def write_wav(buffer: np.ndarray, path: Union[str, Path], sample_rate: int = 44100) -> None:
    """Write ``buffer`` (floats in [-1, 1]) as 16-bit little-endian mono PCM."""
    buffer = np.asarray(buffer)
    if buffer.size == 0:
        raise ValueError("refusing to write an empty buffer")
    with open(path, "wb") as fh, wave.open(fh, "wb") as w:
        w.setnchannels(1)
        w.setsampwidth(2)
        w.setframerate(sample_rate)
        w.writeframes(to_pcm16(buffer).tobytes())
