import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from saptak.errors import DomainError, ParseError, RejectedShift
from saptak.murchhana import murchhana
from saptak.sargam import (
    Melody,
    MelodyEvent,
    event_frequencies,
    format_melody,
    note_token,
    parse_melody,
    transpose_melody,
)
from saptak.swara import SHUDDHA, Swara, Tonic, swara_frequency

from strategies import melodies, shuddha_melodies


class TestParse:
    def test_shuddha_run(self):
        m = parse_melody("s r g m")
        assert [e.swara for e in m.events] == list(SHUDDHA[:4])
        assert all(e.register == 0 and e.beats == 1 for e in m.events)
        assert m.tonic == Tonic()

    def test_marks_and_rest(self):
        m = parse_melody("G, n' -")
        assert m.events == (
            MelodyEvent(Swara("ga", "komal"), -1),
            MelodyEvent(Swara("ni"), 1),
            MelodyEvent.rest(),
        )
        assert m.events[2].kind == "rest"

    def test_durations(self):
        m = parse_melody("s:2 -:1/2 M''':3/4")
        assert [e.beats for e in m.events] == [2, Fraction(1, 2), Fraction(3, 4)]
        assert m.events[2].register == 3

    def test_header_and_comments(self):
        text = "# a comment\n@tonic B_flat2  # header\ns r\n\ng  # end\n"
        m = parse_melody(text)
        assert len(m.events) == 3
        assert m.tonic == Tonic.parse("A#2")

    def test_sharp_in_header_is_not_a_comment(self):
        m = parse_melody("@tonic A#2 # comment\ns r # more")
        assert m.tonic == Tonic.parse("B_flat2")
        assert len(m.events) == 2

    @pytest.mark.parametrize(
        "text, index, token",
        [("x", 1, "x"), ("s r q", 3, "q"), ("s:0", 1, "s:0"), ("s P", 2, "P"), ("s @tonic", 2, "@tonic")],
    )
    def test_errors(self, text, index, token):
        with pytest.raises(ParseError) as info:
            parse_melody(text)
        assert info.value.index == index
        assert info.value.token == token

    def test_empty(self):
        with pytest.raises(ParseError):
            parse_melody("  # nothing\n")

    def test_bad_header(self):
        with pytest.raises(ParseError):
            parse_melody("@tonic xyz\ns")


class TestFormat:
    def test_tokens(self):
        assert format_melody(Melody((MelodyEvent(Swara("sa")),))) == "s"
        assert format_melody(Melody((MelodyEvent(Swara("ni", "komal"), 1),))) == "N'"
        assert note_token(None, 0, Fraction(3, 2)) == "-:3/2"

    def test_canonicalises(self):
        assert format_melody(parse_melody("s',  r:1\n g:4/2 n,'")) == "s r g:2 n"

    def test_header_written_for_other_tonics(self):
        m = parse_melody("@tonic F3\ns")
        assert format_melody(m) == "@tonic F3\ns"
        m = parse_melody("@tonic 300\ns")
        assert format_melody(m) == "@tonic 300.0\ns"

    @given(melodies())
    def test_round_trip(self, m):
        text = format_melody(m)
        assert parse_melody(text) == m
        assert format_melody(parse_melody(text)) == text


class TestTranspose:
    def test_scale_change(self):
        m = parse_melody("@tonic C3\ns r g")
        out = transpose_melody(m, "scale-change", 5)
        assert out.events == m.events
        assert out.tonic.pitch_name == "F3"

    def test_murchhana_kafi(self):
        out = transpose_melody(parse_melody("s r g m p d n s'"), "murchhana", 1)
        assert format_melody(Melody(out.events)) == "s r G m p d N s'"
        assert out.tonic.sa_frequency == pytest.approx(swara_frequency(Tonic(), Swara("re")))

    @given(melodies())
    def test_shift_zero_is_identity(self, m):
        shuddha_only = all(e.is_rest or e.swara.is_shuddha for e in m.events)
        if shuddha_only:
            assert transpose_melody(m, "murchhana", 0) == m
        else:
            with pytest.raises(DomainError):
                transpose_melody(m, "murchhana", 0)

    @pytest.mark.parametrize("shift", range(6))
    def test_pure_saptak_gives_thaat(self, shift):
        out = transpose_melody(parse_melody("s r g m p d n s'"), "murchhana", shift)
        assert tuple(e.swara for e in out.events[:7]) == murchhana(shift).degrees
        assert out.events[7] == MelodyEvent(Swara("sa"), 1)

    def test_rejected(self):
        with pytest.raises(RejectedShift):
            transpose_melody(parse_melody("s r g"), "murchhana", 6)

    def test_vikrita_source(self):
        with pytest.raises(DomainError):
            transpose_melody(parse_melody("s G"), "murchhana", 1)

    def test_unknown_mode(self):
        with pytest.raises(ValueError):
            transpose_melody(parse_melody("s"), "retrograde", 1)

    @given(melodies(), st.integers(-24, 24))
    def test_scale_change_inverse(self, m, k):
        back = transpose_melody(transpose_melody(m, "scale-change", k), "scale-change", -k)
        assert back.events == m.events
        assert math.isclose(back.tonic.sa_frequency, m.tonic.sa_frequency, rel_tol=1e-12)

    @given(melodies(), st.integers(-24, 24))
    def test_scale_change_moves_every_note_together(self, m, k):
        before = event_frequencies(m)
        after = event_frequencies(transpose_melody(m, "scale-change", k))
        for a, b in zip(before, after):
            if a is None:
                assert b is None
            else:
                assert math.isclose(b, a * 2 ** (k / 12), rel_tol=1e-9)

    @given(shuddha_melodies, st.integers(0, 5))
    def test_murchhana_keeps_the_keys(self, m, shift):
        # each note sounds the original-saptak key `shift` degrees higher
        out = transpose_melody(m, "murchhana", shift)
        for e, hz in zip(m.events, event_frequencies(out)):
            if e.is_rest:
                assert hz is None
                continue
            carry, idx = divmod(e.swara.degree_index + shift, 7)
            key = swara_frequency(m.tonic, SHUDDHA[idx], e.register + carry)
            assert math.isclose(hz, key, rel_tol=1e-9)
