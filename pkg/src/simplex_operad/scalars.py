"""Scalar values backing probability entries.

Two numeric modes coexist throughout the package: exact scalars are
`fractions.Fraction` (always lowest terms, positive denominator -- the
stdlib guarantees both), float scalars are IEEE binary64.  Arithmetic on
two exact scalars stays exact; anything that mixes modes or takes a
logarithm is float.
"""

from __future__ import annotations

from fractions import Fraction

# A scalar is either a Fraction (exact) or a float.  Plain ints count as
# exact and are promoted to Fraction on storage.
Scalar = Fraction | float

EXACT = "exact"
FLOAT = "float"

_EXACT_TYPES = (Fraction, int)


def is_exact(value: Scalar) -> bool:
    """True for Fraction/int scalars, False for floats."""
    return isinstance(value, _EXACT_TYPES) and not isinstance(value, bool)


def as_scalar(value: Scalar | int) -> Scalar:
    """Promote ints to Fraction; pass Fractions and floats through."""
    if isinstance(value, bool) or not isinstance(value, (Fraction, int, float)):
        raise ValueError(f"not a scalar: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    return value


def to_float(value: Scalar) -> float:
    return float(value)


def parse_scalar(token: str | int | float) -> Scalar:
    """Parse one scalar.

    Strings of the form "a/b" or "a" (integers) are exact; decimal or
    exponent notation is float.  Numbers keep their Python type: ints are
    exact, floats are float.
    """
    if isinstance(token, bool):
        raise ValueError(f"not a scalar: {token!r}")
    if isinstance(token, int):
        return Fraction(token)
    if isinstance(token, float):
        return token
    if not isinstance(token, str):
        raise ValueError(f"not a scalar: {token!r}")
    text = token.strip()
    if not text:
        raise ValueError("empty scalar")
    bare = text.lstrip("+-")
    if bare.isdigit() or ("/" in bare and all(part.isdigit() for part in bare.split("/", 1))):
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"bad rational {text!r}: {exc}") from None
    try:
        return float(text)
    except ValueError:
        raise ValueError(f"bad scalar {text!r}") from None


def format_scalar(value: Scalar) -> str:
    """Render a scalar so that parse_scalar round-trips it exactly."""
    if is_exact(value):
        return str(as_scalar(value))
    return repr(float(value))


def scalar_json(value: Scalar) -> str | float:
    """JSON form: exact scalars as "a/b" strings, floats as numbers."""
    if is_exact(value):
        return str(as_scalar(value))
    return float(value)
