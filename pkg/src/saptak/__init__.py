"""Indian classical scale theory: shrutis, saptaks, scale change and murchhana."""

__version__ = "0.1.0"

from .errors import (
    AliasError,
    DomainError,
    NotOnKeyboard,
    ParseError,
    RejectedShift,
    SaptakError,
    UnknownRaga,
)
from .murchhana import (
    Rejection,
    Thaat,
    carnatic_name,
    enumerate_murchhanas,
    major_pattern,
    murchhana,
    rotate_pattern,
    scale_change,
)
from .pitch import (
    SHRUTIS,
    deviation_cents,
    ets_frequency,
    just_frequency,
    ratio_to_cents,
    shruti_table,
)
from .sargam import Melody, MelodyEvent, format_melody, parse_melody, transpose_melody
from .swara import SHUDDHA, SWARAS, Swara, Tonic, semitone_index, swara_frequency, western_name
from .synth import RenderConfig, render_melody, render_tone, write_wav
