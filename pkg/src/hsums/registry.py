"""Catalog of the basic integrand functions whose Mellin transforms span the
nested harmonic sums of single-scale problems, weights 1 through 6.

Entries of the form numerator(x)/(x - 1) are plus-regularized: the transform
is integral_0^1 (x^(N-1) - 1) * numerator(x)/(x - 1) dx, which removes the
endpoint pole.  Analytic continuation to complex argument is implemented for
the weight <= 3 subset (support level "continuable"); higher-weight entries
are metadata ("registry") - their ids, weights and numerator descriptors are
stable and exposed, but no evaluator is attached.

The loop-order counts stored in ORDER_COUNTS record how many catalog
functions enter physics quantities at each order of the strong coupling;
they are informational tags only and nothing in this package depends on
them.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import UsageError

CONTINUABLE = "continuable"
REGISTRY_ONLY = "registry"


@dataclass(frozen=True)
class BasicFunction:
    """One catalog entry.

    ``denominator_sign`` is +1 for 1/(x+1) and -1 for 1/(x-1);
    ``numerator_kind`` names an evaluator in :mod:`hsums.mellin` when the
    numerator is numerically evaluable, else None.
    """

    id: str
    weight: int
    numerator: str
    denominator_sign: int
    plus_regularized: bool
    support: str
    numerator_kind: str | None = None
    notes: str = ""

    @property
    def display(self) -> str:
        den = "(x-1)" if self.denominator_sign < 0 else "(x+1)"
        body = f"{self.numerator}/{den}"
        return body + "+" if self.plus_regularized else body

    def to_json_obj(self) -> dict:
        return {
            "id": self.id,
            "weight": self.weight,
            "numerator": self.numerator,
            "denominator_sign": self.denominator_sign,
            "plus_regularized": self.plus_regularized,
            "support": self.support,
            "display": self.display,
        }


def _entry(fid, w, num, sign, support, kind=None, notes=""):
    # (x-1) denominators are always plus-regularized in this catalog: every
    # such numerator is nonzero at x = 1.
    return BasicFunction(
        id=fid,
        weight=w,
        numerator=num,
        denominator_sign=sign,
        plus_regularized=(sign < 0),
        support=support,
        numerator_kind=kind,
        notes=notes,
    )


_ENTRIES = [
    # weight 1
    _entry("F0", 1, "1", -1, CONTINUABLE, kind="one"),
    # weight 2
    _entry("F1", 2, "ln(1+x)", +1, CONTINUABLE, kind="log1p"),
    # weight 3
    _entry("F2", 3, "Li2(x)", -1, CONTINUABLE, kind="li2"),
    _entry("F3", 3, "Li2(x)", +1, CONTINUABLE, kind="li2"),
    # weight 4
    _entry("B401", 4, "Li3(x)", +1, REGISTRY_ONLY, kind="li3"),
    _entry("B402", 4, "S12(x)", -1, REGISTRY_ONLY, kind="s12"),
    _entry("B403", 4, "S12(x)", +1, REGISTRY_ONLY, kind="s12"),
    # weight 5
    _entry("B501", 5, "Li4(x)", -1, REGISTRY_ONLY),
    _entry("B502", 5, "Li4(x)", +1, REGISTRY_ONLY),
    _entry("B503", 5, "S13(x)", -1, REGISTRY_ONLY),
    _entry("B504", 5, "S13(x)", +1, REGISTRY_ONLY),
    _entry("B505", 5, "S22(x)", -1, REGISTRY_ONLY),
    _entry("B506", 5, "S22(x)", +1, REGISTRY_ONLY),
    _entry("B507", 5, "Li2(x)^2", -1, REGISTRY_ONLY),
    _entry("B508", 5, "Li2(x)^2", +1, REGISTRY_ONLY),
    _entry("B509", 5, "ln(x)*S12(-x) - Li2(-x)^2/2", -1, REGISTRY_ONLY),
    _entry("B510", 5, "ln(x)*S12(-x) - Li2(-x)^2/2", +1, REGISTRY_ONLY),
    # weight 6
    _entry("B601", 6, "Li5(x)", +1, REGISTRY_ONLY),
    _entry("B602", 6, "S14(x)", -1, REGISTRY_ONLY),
    _entry("B603", 6, "S14(x)", +1, REGISTRY_ONLY),
    _entry("B604", 6, "S23(x)", -1, REGISTRY_ONLY),
    _entry("B605", 6, "S23(x)", +1, REGISTRY_ONLY),
    _entry("B606", 6, "S32(x)", -1, REGISTRY_ONLY),
    _entry("B607", 6, "S32(x)", +1, REGISTRY_ONLY),
    _entry("B608", 6, "Li2(x)*Li3(x)", -1, REGISTRY_ONLY),
    _entry("B609", 6, "Li2(x)*Li3(x)", +1, REGISTRY_ONLY),
    _entry("B610", 6, "S12(x)*Li2(x)", -1, REGISTRY_ONLY),
    _entry("B611", 6, "S12(x)*Li2(x)", +1, REGISTRY_ONLY),
    _entry("B612", 6, "A1(x)", +1, REGISTRY_ONLY,
           notes="A1(x) = integral_0^x Li2(y)^2 dy/y"),
    _entry("B613", 6, "A2(x)", -1, REGISTRY_ONLY,
           notes="A2(x) = integral_0^x ln(1-y) S12(y) dy/y"),
    _entry("B614", 6, "A2(x)", +1, REGISTRY_ONLY,
           notes="A2(x) = integral_0^x ln(1-y) S12(y) dy/y"),
    _entry("B615", 6, "A3(x)", +1, REGISTRY_ONLY,
           notes="A3(x) = integral_0^x (Li4(y) - zeta4) dy/y"),
    _entry("B616", 6, "H[0,-1,0,1,1](x)", -1, REGISTRY_ONLY,
           notes="harmonic polylogarithm over the {0,1,-1} alphabet"),
    _entry("B617", 6, "A1(-x) + N_alpha(x)", +1, REGISTRY_ONLY,
           notes="N_alpha: polynomials of Nielsen integrals; placeholder, no evaluator"),
]

REGISTRY: dict[str, BasicFunction] = {e.id: e for e in _ENTRIES}

_BY_DISPLAY = {e.display: e.id for e in _ENTRIES}

#: Informational: number of catalog functions entering physics quantities
#: per order of the strong coupling (string values are stated bounds).
ORDER_COUNTS = {
    "order1_wilson_or_anomalous_dim": 1,
    "order2_anomalous_dim": 2,
    "order2_wilson": "<=5",
    "order3_anomalous_dim": 15,
    "order3_wilson": 35,
}


def get_function(fnid: str) -> BasicFunction:
    """Look up by id; a few display-style aliases are accepted."""
    if fnid in REGISTRY:
        return REGISTRY[fnid]
    if fnid in _BY_DISPLAY:
        return REGISTRY[_BY_DISPLAY[fnid]]
    alias = fnid.replace(" ", "")
    if alias in ("1/(x-1)+", "1/(x-1)_+"):
        return REGISTRY["F0"]
    raise UsageError(f"unknown basic function {fnid!r}")


def registry_list(
    weight: int | tuple[int, int] | None = None,
    support: str | None = None,
) -> list[BasicFunction]:
    """Catalog entries filtered by weight (single value or inclusive range)
    and/or support level, in catalog order."""
    if support is not None and support not in (CONTINUABLE, REGISTRY_ONLY):
        raise UsageError(f"unknown support level {support!r}")
    lo, hi = (weight, weight) if isinstance(weight, int) else (weight or (1, 6))
    out = []
    for e in _ENTRIES:
        if not lo <= e.weight <= hi:
            continue
        if support is not None and e.support != support:
            continue
        out.append(e)
    return out
