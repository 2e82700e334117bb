import pytest
from hypothesis import given, strategies as st

from mesomath.errors import (
    BadFraction,
    DigitOutOfRange,
    EmptyInput,
    MalformedSeparator,
    MeasurementSyntax,
    SexagesimalError,
    UnitOrderViolation,
    UnknownUnit,
)
from mesomath.spvn import normalize
from mesomath.textio import (
    format_anchored,
    format_measurement,
    format_spvn,
    parse_anchored,
    parse_measurement,
    parse_spvn,
)


class TestParseSpvn:
    def test_colon_separator(self):
        assert parse_spvn("44:26:40").digits == (44, 26, 40)

    def test_point_separator(self):
        assert parse_spvn("7.30").digits == (7, 30)

    def test_normalizes(self):
        assert parse_spvn("3:0") == parse_spvn("3")

    def test_digit_out_of_range(self):
        with pytest.raises(DigitOutOfRange) as e:
            parse_spvn("1:75")
        assert e.value.diagnostic is not None

    def test_empty(self):
        with pytest.raises(EmptyInput):
            parse_spvn("   ")

    def test_double_separator(self):
        with pytest.raises(MalformedSeparator):
            parse_spvn("4::26")

    def test_garbage(self):
        with pytest.raises(MalformedSeparator):
            parse_spvn("4:2a")

    def test_negative(self):
        with pytest.raises(MalformedSeparator):
            parse_spvn("-5")


class TestFormatSpvn:
    def test_no_padding(self):
        assert format_spvn(parse_spvn("1:3")) == "1:3"

    def test_long(self):
        s = "11:51:54:50:37:30"
        assert format_spvn(parse_spvn(s)) == s

    def test_single(self):
        assert format_spvn(parse_spvn("5")) == "5"

    @given(st.lists(st.integers(0, 59), min_size=1, max_size=6).filter(any))
    def test_round_trip(self, ds):
        n = normalize(ds)
        assert parse_spvn(format_spvn(n)) == n


class TestAnchoredLiterals:
    @pytest.mark.parametrize("text", ["6:30e-1", "5e0", "1:19:6:5:37:30e3"])
    def test_round_trip(self, text):
        assert format_anchored(parse_anchored(text)) == text

    def test_missing_exponent(self):
        with pytest.raises(MalformedSeparator):
            parse_anchored("6:30e")

    def test_no_digits(self):
        with pytest.raises(MalformedSeparator):
            parse_anchored("e3")


class TestParseMeasurement:
    def test_fraction_then_unit_then_term(self):
        m = parse_measurement("1/2 kush 3 shu-si", "L")
        assert format_measurement(m) == "1/2 kuš 3 šu-si"

    def test_utf8_names(self):
        m = parse_measurement("2/3 sar 5 gin", "S")
        assert format_measurement(m) == "2/3 sar 5 gin"

    def test_mixed_count(self):
        m = parse_measurement("1 1/2 ninda", "L")
        assert m.terms[0].whole == 1 and m.terms[0].frac == 0.5

    def test_unicode_fraction_glyph(self):
        assert parse_measurement("⅓ kuš", "L") == parse_measurement("1/3 kush", "L")

    def test_unknown_unit(self):
        with pytest.raises(UnknownUnit):
            parse_measurement("3 cubit", "L")

    def test_unit_order_violation(self):
        with pytest.raises(UnitOrderViolation):
            parse_measurement("3 shu-si 1 kush", "L")

    def test_bad_fraction(self):
        with pytest.raises(BadFraction):
            parse_measurement("1/5 kush", "L")

    def test_missing_count(self):
        with pytest.raises(MeasurementSyntax):
            parse_measurement("kush", "L")

    def test_dangling_count(self):
        with pytest.raises(MeasurementSyntax):
            parse_measurement("3 kush 12", "L")

    def test_wrong_system_unit(self):
        with pytest.raises(UnknownUnit):
            parse_measurement("3 ninda", "W")


class TestParserTotality:
    @given(st.text(max_size=30))
    def test_spvn_never_crashes(self, text):
        try:
            parse_spvn(text)
        except SexagesimalError:
            pass

    @given(st.text(max_size=30), st.sampled_from(["L", "Lh", "S", "W", "C"]))
    def test_measurement_never_crashes(self, text, system):
        try:
            parse_measurement(text, system)
        except SexagesimalError:
            pass

    @given(st.text(max_size=20))
    def test_anchored_never_crashes(self, text):
        try:
            parse_anchored(text)
        except SexagesimalError:
            pass
