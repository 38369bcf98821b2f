"""Lossless JSON/CSV serialization: decimal-string integers, p/q rationals."""

from __future__ import annotations

from fractions import Fraction


def frac_to_str(x) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}" if x.denominator != 1 else str(x.numerator)


def str_to_frac(s: str) -> Fraction:
    if "/" in s:
        num, den = s.split("/")
        return Fraction(int(num), int(den))
    return Fraction(int(s))


def poly_to_strings(p) -> list:
    return [str(c) for c in p]


def strings_to_poly(ss) -> tuple:
    return tuple(int(s) for s in ss)


def interval_to_dict(interval) -> dict:
    return {"lo": frac_to_str(interval.lo), "hi": frac_to_str(interval.hi)}


def census_to_dict(census) -> dict:
    return {"inside": census.inside, "on": census.on, "outside": census.outside}
