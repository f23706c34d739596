import sys
from contextlib import contextmanager
from fractions import Fraction


@contextmanager
def _unlimited_digits():
    """
    Lift the interpreter cap on int <-> str conversion for the duration of
    the block
    """
    if not hasattr(sys, "set_int_max_str_digits"):
        yield
        return
    previous = sys.get_int_max_str_digits()
    sys.set_int_max_str_digits(0)
    try:
        yield
    finally:
        sys.set_int_max_str_digits(previous)


def parse_rational(text) -> Fraction:
    """
    Parse "num/den" or an integer into an exact Fraction. Decimal strings are
    refused so that every threshold stays exact.
    """
    text = str(text).strip()
    if "." in text or "e" in text.lower():
        raise ValueError(f"Expected a rational 'num/den', got {text!r}")
    try:
        with _unlimited_digits():
            return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"Expected a rational 'num/den', got {text!r}")


def format_rational(x) -> str:
    x = Fraction(x)
    with _unlimited_digits():
        return f"{x.numerator}/{x.denominator}"
