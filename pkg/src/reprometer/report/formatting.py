"""Rounding rules for numbers printed in prose reports."""

from __future__ import annotations

from decimal import ROUND_HALF_EVEN, Decimal, localcontext

from reprometer.config import ReportSettings
from reprometer.stats import PrecisionReport

_NUMBER_WORDS = {
    2: "two",
    3: "three",
    4: "four",
    5: "five",
    6: "six",
    7: "seven",
    8: "eight",
    9: "nine",
    10: "ten",
}


def round_decimal(value: float, decimals: int) -> Decimal:
    """Round half-to-even on the value's 12-significant-digit decimal form.

    Going through 12 significant digits first drops binary noise, so a mean
    of exactly 0.703625 rounds to 0.7036 whichever float the summation produced.
    """
    with localcontext() as ctx:
        ctx.prec = 60
        return Decimal(format(value, ".12g")).quantize(
            Decimal(1).scaleb(-decimals), rounding=ROUND_HALF_EVEN
        )


def fmt_number(value: float, decimals: int) -> str:
    """Rounded value with trailing zeros dropped ("4.9690" -> "4.969", "100.00" -> "100")."""
    text = format(round_decimal(value, decimals), "f")
    if "." in text:
        text = text.rstrip("0").rstrip(".")
    if text in ("", "-0"):
        text = "0"
    return text


def fmt_signed(value: float, decimals: int) -> str:
    text = fmt_number(value, decimals)
    return text if text.startswith("-") or text == "0" else f"+{text}"


def value_decimals(report: PrecisionReport, settings: ReportSettings) -> int:
    """Decimals for means and standard deviations: input precision + extra, capped."""
    return min(report.value_decimals + settings.extra_value_decimals, settings.max_value_decimals)


def count_words(n: int) -> str:
    return _NUMBER_WORDS.get(n, str(n))


def fmt_level(level: float) -> str:
    return f"{level * 100:g}"
