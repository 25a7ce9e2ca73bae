"""Exact integer polynomials, palindrome classification, and the two text formats."""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .errors import ParameterRangeError


@dataclass(frozen=True)
class IntPolynomial:
    """Dense integer polynomial; ``coeffs[i]`` is the coefficient of x^(degree - i).

    The length fixes the degree structurally, so trailing zeros are kept and
    equality is bit-exact coefficient equality.
    """

    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) < 1:
            raise ParameterRangeError("a polynomial needs at least one coefficient")
        for c in self.coeffs:
            if not isinstance(c, int):
                raise ParameterRangeError("coefficients must be exact integers")

    @classmethod
    def from_terms(cls, degree: int, terms) -> "IntPolynomial":
        """Build from an {exponent: coefficient} mapping; absent exponents are 0."""
        if degree < 0:
            raise ParameterRangeError("degree must be >= 0")
        coeffs = [0] * (degree + 1)
        for e, c in terms.items():
            if not (0 <= e <= degree):
                raise ParameterRangeError(f"exponent {e} outside 0..{degree}")
            coeffs[degree - e] += c
        return cls(tuple(coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_monic(self) -> bool:
        return self.coeffs[0] == 1

    def b(self, i: int) -> int:
        """Coefficient of x^(degree - i); b(0) is the leading coefficient."""
        return self.coeffs[i]

    def __call__(self, x):
        """Exact Horner evaluation; int stays int, Fraction stays Fraction."""
        acc = self.coeffs[0] * (x ** 0)
        for c in self.coeffs[1:]:
            acc = acc * x + c
        return acc

    def __str__(self):
        return format_polynomial(self)


class PalindromeClass(Enum):
    PALINDROMIC = "palindromic"
    ANTIPALINDROMIC = "antipalindromic"
    NEITHER = "neither"


def classify_palindrome(p: IntPolynomial) -> PalindromeClass:
    """Palindromic iff b_i = b_{m-i} for all i, antipalindromic iff b_i = -b_{m-i}."""
    if not p.is_monic:
        raise ParameterRangeError("palindrome classification is defined for monic polynomials")
    c = p.coeffs
    r = c[::-1]
    palindromic = c == r
    antipalindromic = all(a == -b for a, b in zip(c, r))
    # both at once would force every coefficient to vanish, impossible for monic p
    assert not (palindromic and antipalindromic)
    if palindromic:
        return PalindromeClass.PALINDROMIC
    if antipalindromic:
        return PalindromeClass.ANTIPALINDROMIC
    return PalindromeClass.NEITHER


def eval_at_one(p: IntPolynomial) -> int:
    """p(1), the exact coefficient sum."""
    return sum(p.coeffs)


def format_polynomial(p: IntPolynomial) -> str:
    """Pretty form in descending powers, e.g. ``x^14 - x^8 - x^7 - x^6 + 1``."""
    parts = []
    for i, c in enumerate(p.coeffs):
        if c == 0:
            continue
        e = p.degree - i
        mag = abs(c)
        if e == 0:
            body = str(mag)
        else:
            var = "x" if e == 1 else f"x^{e}"
            body = var if mag == 1 else f"{mag}{var}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(("+ " if c > 0 else "- ") + body)
    return " ".join(parts) if parts else "0"


def format_coefficient_list(p: IntPolynomial) -> str:
    """Coefficient-list form in descending powers, e.g. ``[1,0,-1]``."""
    return "[" + ",".join(str(c) for c in p.coeffs) + "]"


_CHUNK_RE = re.compile(r"([+-]?)(\d+)?(x(?:\^(\d+))?)?\Z")


def parse_polynomial(text: str) -> IntPolynomial:
    """Parse either text format, auto-detected by the leading character.

    The coefficient-list form round-trips any polynomial; the pretty form
    fixes the degree by its highest written exponent.
    """
    s = text.strip()
    if not s:
        raise ParameterRangeError("empty polynomial text")
    if s.startswith("["):
        try:
            data = json.loads(s)
        except ValueError as exc:
            raise ParameterRangeError(f"bad coefficient list: {exc}") from exc
        if not isinstance(data, list) or not data or not all(isinstance(c, int) for c in data):
            raise ParameterRangeError("coefficient list must be a non-empty list of integers")
        return IntPolynomial(tuple(data))
    return _parse_pretty(s)


def _parse_pretty(s: str) -> IntPolynomial:
    compact = s.replace(" ", "")
    chunks = re.findall(r"[+-]?[^+-]+", compact)
    if not chunks or "".join(chunks) != compact:
        raise ParameterRangeError(f"cannot parse polynomial {s!r}")
    terms: dict[int, int] = {}
    for chunk in chunks:
        m = _CHUNK_RE.match(chunk)
        if m is None:
            raise ParameterRangeError(f"cannot parse polynomial term {chunk!r}")
        sign, digits, xpart, exp = m.groups()
        if digits is None and xpart is None:
            raise ParameterRangeError(f"cannot parse polynomial term {chunk!r}")
        coeff = int(digits) if digits is not None else 1
        if sign == "-":
            coeff = -coeff
        if xpart is None:
            e = 0
        elif exp is None:
            e = 1
        else:
            e = int(exp)
        terms[e] = terms.get(e, 0) + coeff
    degree = max(terms)
    return IntPolynomial.from_terms(degree, terms)


def to_fraction(x) -> Fraction:
    """Exact conversion of int/float/str/Fraction tolerances and bounds."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, float):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise ParameterRangeError(f"cannot interpret {x!r} as an exact rational")
