"""High-precision mathematical constants.

Values are stored as 50-significant-digit decimal literals and exposed as
floats, :class:`~decimal.Decimal` and :class:`~fractions.Fraction`.  The test
suite re-derives every literal from independent series (Euler-Maclaurin for
the zeta values, the binary log series for ln 2, a lattice-point-free
Euler-Maclaurin evaluation for gamma_E) and checks 30+ digits.
"""

from __future__ import annotations

from decimal import Decimal
from fractions import Fraction

_LITERALS = {
    "gamma_E": "0.57721566490153286060651209008240243104215933593992",
    "ln2": "0.69314718055994530941723212145817656807550013436026",
    "pi": "3.1415926535897932384626433832795028841971693993751",
    "zeta2": "1.6449340668482264364724151666460251892189499012068",
    "zeta3": "1.2020569031595942853997381615114499907649862923405",
    "zeta4": "1.0823232337111381915160036965411679027747509519187",
    "zeta5": "1.0369277551433699263313654864570341680570809195019",
    "zeta6": "1.0173430619844491397145179297909205279018174900329",
}

#: Names of the symbolic constants allowed in expression monomials.
SYMBOLS = ("zeta2", "zeta3", "zeta4", "zeta5", "zeta6", "ln2", "gamma_E")


def as_decimal(name: str) -> Decimal:
    return Decimal(_LITERALS[name])


def as_fraction(name: str) -> Fraction:
    return Fraction(*as_decimal(name).as_integer_ratio())


def as_float(name: str) -> float:
    return float(as_decimal(name))


def zeta(k: int) -> float:
    """zeta(k) for 2 <= k <= 6."""
    if not 2 <= k <= 6:
        raise ValueError(f"zeta({k}) is not tabulated; supported range is 2..6")
    return as_float(f"zeta{k}")


GAMMA_E = as_float("gamma_E")
LN2 = as_float("ln2")
PI = as_float("pi")
ZETA2 = as_float("zeta2")
ZETA3 = as_float("zeta3")
ZETA4 = as_float("zeta4")
ZETA5 = as_float("zeta5")
ZETA6 = as_float("zeta6")

LN2_FRACTION = as_fraction("ln2")

#: float values for every symbolic constant, keyed by symbol name.
SYMBOL_VALUES = {name: as_float(name) for name in SYMBOLS}
