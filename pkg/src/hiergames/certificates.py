"""Exact rational weight certificates.

A certificate is a quota q >= 0 and per-level weights w_i >= 0, not all zero,
all exact rationals. The same shape serves both representation claims:

  weighted:  every minimal winning coalition weighs >= q and every maximal
             losing coalition weighs strictly less than q;
  rough:     as above with the strict inequality relaxed to <= q.

Floats are rejected outright; 0.1 is not a rational anyone meant.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

from .core import Coalition

__all__ = ["Rational", "RoughCert", "as_rational", "rational_str", "parse_rational"]

Rational = Union[int, Fraction]


def as_rational(value: Rational, what: str = "value") -> Fraction:
    """Coerce int/Fraction to Fraction; reject floats and anything inexact."""
    if isinstance(value, bool):
        raise TypeError(f"{what} must be a rational, got bool")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, Fraction):
        return value
    raise TypeError(f"{what} must be int or Fraction, got {type(value).__name__}")


def rational_str(value: Fraction) -> str:
    """Decimal-free text form: '3/4', '-1/2', or '5' for integers."""
    return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


def parse_rational(text: str) -> Fraction:
    """Parse 'p' or 'p/q' with integer parts. Decimal forms are rejected
    (int() raises), keeping serialized certificates exact by construction."""
    text = text.strip()
    if "/" in text:
        num, _, den = text.partition("/")
        return Fraction(int(num), int(den))
    return Fraction(int(text))


@dataclass(frozen=True)
class RoughCert:
    """Quota and level weights, exact, nonnegative, not all zero."""

    quota: Fraction
    weights: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        quota = as_rational(self.quota, "quota")
        weights = tuple(as_rational(w, "weight") for w in self.weights)
        object.__setattr__(self, "quota", quota)
        object.__setattr__(self, "weights", weights)
        if not weights:
            raise ValueError("certificate needs at least one weight")
        if quota < 0:
            raise ValueError(f"quota must be >= 0, got {quota}")
        if any(w < 0 for w in weights):
            raise ValueError(f"weights must be >= 0, got {weights}")
        if quota == 0 and all(w == 0 for w in weights):
            raise ValueError("certificate must not be identically zero")

    @property
    def m(self) -> int:
        return len(self.weights)

    def weight_of(self, coalition: Coalition) -> Fraction:
        if len(coalition.counts) != self.m:
            raise ValueError(f"{coalition} has wrong dimension for {self.m} weights")
        return sum((w * c for w, c in zip(self.weights, coalition.counts)), Fraction(0))

    def to_dict(self) -> dict:
        return {
            "quota": rational_str(self.quota),
            "weights": [rational_str(w) for w in self.weights],
        }

    @staticmethod
    def from_dict(data: dict) -> "RoughCert":
        return RoughCert(
            quota=parse_rational(data["quota"]),
            weights=tuple(parse_rational(w) for w in data["weights"]),
        )

    def __str__(self) -> str:
        ws = ", ".join(rational_str(w) for w in self.weights)
        return f"[q={rational_str(self.quota)}; w=({ws})]"


def weights_from(values: Iterable[Rational]) -> tuple[Fraction, ...]:
    """Convenience: exact tuple from mixed int/Fraction values."""
    return tuple(as_rational(v, "weight") for v in values)
