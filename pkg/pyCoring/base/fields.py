"""Exact ground fields."""


from __future__ import annotations

__all__ = ["Field", "QQ_FIELD"]

from typing import Any, NamedTuple
from fractions import Fraction
from functools import lru_cache
import re

from sympy import isprime
from sympy.polys.domains import QQ, GF


_RATIONAL = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")

MAX_MODULUS = 2 ** 31


@lru_cache(maxsize=None)
def _domain(p: int) -> Any:
    return QQ if p == 0 else GF(p, symmetric=False)


class Field(NamedTuple):
    """
    A computable ground field: the rationals or a prime field.

    Elements are sympy domain elements; ℚ values are kept in lowest terms and
    𝔽_p values as residues in 0..p-1.

    :param p: Characteristic. 0 selects ℚ, a prime p selects 𝔽_p.
    """

    p: int = 0

    @classmethod
    def parse(cls, text: str) -> "Field":
        """Parse 'Q' or 'Fp:<p>'."""
        text = text.strip()
        if text == "Q":
            return cls(0)
        if text.startswith("Fp:"):
            try:
                p = int(text[3:])
            except ValueError as e:
                raise ValueError(f"Invalid modulus in field '{text}'") from e
            return cls.prime(p)
        raise ValueError(f"Unknown field '{text}'; expected 'Q' or 'Fp:<p>'")

    @classmethod
    def prime(cls, p: int) -> "Field":
        if not (1 < p < MAX_MODULUS) or not isprime(p):
            raise ValueError(f"Modulus {p} is not a prime below 2**31")
        return cls(p)

    def __str__(self) -> str:
        return "Q" if self.p == 0 else f"Fp:{self.p}"

    @property
    def domain(self) -> Any:
        """The underlying sympy domain."""
        return _domain(self.p)

    @property
    def zero(self) -> Any:
        return self.domain.zero

    @property
    def one(self) -> Any:
        return self.domain.one

    def convert(self, value: Any) -> Any:
        """
        Convert value to an element of self.

        Accepts domain elements, ints, Fractions and strings of the form
        'a' or 'a/b'.
        """
        K = self.domain
        if K.of_type(value):
            return value
        if isinstance(value, bool):
            raise TypeError("Booleans are not field scalars")
        if isinstance(value, int):
            return K(value)
        if isinstance(value, str):
            value = self.parse_rational(value)
        if isinstance(value, Fraction):
            num, den = value.numerator, value.denominator
            if self.p and den % self.p == 0:
                raise ZeroDivisionError(
                    f"Denominator {den} vanishes in {self}")
            return K(num) / K(den)
        raise TypeError(f"Cannot convert {type(value).__name__} to {self}")

    @staticmethod
    def parse_rational(text: str) -> Fraction:
        """Parse an exact rational 'a' or 'a/b' with b > 0."""
        mo = _RATIONAL.match(text)
        if mo is None:
            raise ValueError(f"Malformed rational '{text}'")
        num, den = mo.groups()
        if den is not None and int(den) == 0:
            raise ZeroDivisionError(f"Zero denominator in '{text}'")
        return Fraction(int(num), int(den) if den is not None else 1)

    def format(self, x: Any) -> str:
        """Render x as an exact string ('a', 'a/b' or a residue)."""
        if self.p:
            return str(int(x) % self.p)
        return str(self.domain.to_sympy(x))

    def is_zero(self, x: Any) -> bool:
        return x == self.domain.zero


QQ_FIELD = Field(0)
