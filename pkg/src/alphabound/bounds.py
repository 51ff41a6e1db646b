"""Lower bounds on the independence number from the degree profile.

All values are exact: rationals for the coefficient bounds, a + b/e for the
limiting-sequence bound.  Every bound requires the graph to be connected
with maximum degree >= 3 and different from the complete graph on
delta+1 vertices, except the Caro-Wei baseline which applies universally.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from .coeffs import CoeffSequence, EulerLinear, c_sequence, d_sequence
from .graphcore import Graph, degree_profile, require_in_class


def brooks_bound(g: Graph) -> Fraction:
    """|V|/delta, the coloring pigeonhole bound."""
    delta = require_in_class(g)
    return Fraction(g.n, delta)


def c_bound(g: Graph) -> Fraction:
    """sum c_i * |V_i| with coefficients for the graph's own maximum degree."""
    delta = require_in_class(g)
    cs = c_sequence(delta)
    prof = degree_profile(g)
    return sum((cs[i] * prof.count(i) for i in range(1, delta + 1)), Fraction(0))


def truncated_c_bound(g: Graph, delta: int) -> Fraction:
    """sum c_i * |V_i| using the first entries of a larger-degree sequence.

    Not comparable with :func:`c_bound` in general: entries alternate
    between larger and smaller as the target degree grows.
    """
    dprime = require_in_class(g)
    if delta <= dprime:
        raise ValueError(
            f"truncation needs a coefficient degree above the graph's maximum"
            f" degree ({delta} <= {dprime})")
    cs = c_sequence(delta)
    prof = degree_profile(g)
    return sum((cs[i] * prof.count(i) for i in range(1, dprime + 1)), Fraction(0))


def d_bound(g: Graph) -> EulerLinear:
    """sum d_i * |V_i| with the limiting coefficients, exact a + b/e."""
    dprime = require_in_class(g)
    ds = d_sequence(dprime)
    prof = degree_profile(g)
    total = EulerLinear(Fraction(0), Fraction(0))
    for i in range(1, dprime + 1):
        total = total + ds[i] * prof.count(i)
    return total


def caro_wei_bound(g: Graph) -> Fraction:
    """sum 1/(d(v)+1); classical baseline, no class restriction."""
    return sum((Fraction(1, g.degree(v) + 1) for v in range(g.n)), Fraction(0))


@dataclass(frozen=True)
class BoundReport:
    graph_id: str
    delta_max: int
    brooks: Fraction
    weighted: Fraction                      # c_bound at the graph's own degree
    truncated: dict = field(default_factory=dict)   # target degree -> value
    euler: EulerLinear = None
    caro_wei: Fraction = None
    best: str = ""


def bound_report(g: Graph, truncation_deltas: Iterable[int] = (),
                 graph_id: str = "") -> BoundReport:
    """Evaluate every applicable bound and name the largest."""
    delta = require_in_class(g)
    brooks = brooks_bound(g)
    weighted = c_bound(g)
    truncated = {d: truncated_c_bound(g, d) for d in sorted(set(truncation_deltas))}
    euler = d_bound(g)
    cw = caro_wei_bound(g)
    candidates = [("brooks", brooks), ("weighted", weighted)]
    candidates += [(f"truncated[{d}]", v) for d, v in sorted(truncated.items())]
    candidates += [("euler", euler), ("caro_wei", cw)]
    best_label, best_value = candidates[0]
    for label, value in candidates[1:]:
        if value > best_value:          # EulerLinear-aware exact comparison
            best_label, best_value = label, value
    return BoundReport(graph_id, delta, brooks, weighted, truncated,
                       euler, cw, best_label)
