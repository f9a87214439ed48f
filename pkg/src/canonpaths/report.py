"""JSON reports. Rationals are written as ``"p/q"`` strings next to a
``*_decimal`` float so exact checks survive a round trip."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field, fields
from fractions import Fraction
from typing import Any

from .bounds import BoundsReport, compare, central_edge_check, length_tradeoff_check
from .graph import Graph, diameter
from .routing import Routing
from .spectral import SpectralReport, TVReport

_RATIONAL_FIELDS = ("gamma_bar", "poincare", "cheeger")


def fraction_str(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def parse_fraction(s: str) -> Fraction:
    return Fraction(s)


def bounds_to_dict(b: BoundsReport) -> dict[str, Any]:
    out: dict[str, Any] = {}
    for f in fields(b):
        value = getattr(b, f.name)
        if f.name in _RATIONAL_FIELDS:
            out[f.name] = fraction_str(value)
            out[f.name + "_decimal"] = float(value)
        else:
            out[f.name] = value
    return out


def bounds_from_dict(d: dict[str, Any]) -> BoundsReport:
    kwargs = {}
    for f in fields(BoundsReport):
        value = d[f.name]
        kwargs[f.name] = parse_fraction(value) if f.name in _RATIONAL_FIELDS else value
    return BoundsReport(**kwargs)


@dataclass(frozen=True)
class GraphSummary:
    n: int
    edges: int
    max_degree: int
    diameter: int

    @classmethod
    def of(cls, g: Graph) -> "GraphSummary":
        return cls(g.n, g.edge_count, g.max_degree, diameter(g))


@dataclass(frozen=True)
class SpectralSummary:
    eigenvalues: tuple[float, ...]
    beta1: float
    beta_star: float

    @classmethod
    def of(cls, s: SpectralReport) -> "SpectralSummary":
        return cls(tuple(float(v) for v in s.eigenvalues), s.beta1, s.beta_star)


@dataclass(frozen=True)
class TVSeries:
    start: int
    tv: tuple[float, ...]
    bound: tuple[float, ...]
    holds: bool

    @classmethod
    def of(cls, t: TVReport) -> "TVSeries":
        return cls(t.start, tuple(map(float, t.tv)), tuple(map(float, t.bound)), t.holds)


@dataclass(frozen=True)
class AnalysisReport:
    graph: GraphSummary
    routing_source: str
    bounds: BoundsReport
    spectral: SpectralSummary
    checks: dict[str, dict[str, Any]] = field(default_factory=dict)
    tv: TVSeries | None = None

    def to_dict(self) -> dict[str, Any]:
        return {
            "graph": asdict(self.graph),
            "routing_source": self.routing_source,
            "bounds": bounds_to_dict(self.bounds),
            "spectral": {
                "eigenvalues": list(self.spectral.eigenvalues),
                "beta1": self.spectral.beta1,
                "beta_star": self.spectral.beta_star,
            },
            "checks": self.checks,
            "tv": None
            if self.tv is None
            else {
                "start": self.tv.start,
                "tv": list(self.tv.tv),
                "bound": list(self.tv.bound),
                "holds": self.tv.holds,
            },
        }

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> "AnalysisReport":
        sp = d["spectral"]
        tv = d.get("tv")
        return cls(
            graph=GraphSummary(**d["graph"]),
            routing_source=d["routing_source"],
            bounds=bounds_from_dict(d["bounds"]),
            spectral=SpectralSummary(tuple(sp["eigenvalues"]), sp["beta1"], sp["beta_star"]),
            checks=d["checks"],
            tv=None
            if tv is None
            else TVSeries(tv["start"], tuple(tv["tv"]), tuple(tv["bound"]), tv["holds"]),
        )

    def to_json(self) -> str:
        return dumps(self.to_dict())

    @classmethod
    def from_json(cls, text: str) -> "AnalysisReport":
        return cls.from_dict(json.loads(text))


def dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def routing_checks(g: Graph, r: Routing) -> dict[str, dict[str, Any]]:
    t1 = length_tradeoff_check(g, r)
    l1 = central_edge_check(g, r)
    return {
        "length_tradeoff": {"premise": t1.premise, "conclusion": t1.conclusion, "holds": t1.holds},
        "central_edge": {
            "subordinate_longest_path": None
            if l1.subordinate_path is None
            else list(l1.subordinate_path),
            "long_enough": l1.long_enough,
            "b_floor": l1.b_floor,
            "conclusion": l1.conclusion,
            "holds": l1.holds,
        },
    }


def analysis_report(
    g: Graph,
    r: Routing,
    source: str,
    spectral: SpectralReport,
    tv: TVReport | None = None,
    extra_checks: dict[str, dict[str, Any]] | None = None,
) -> AnalysisReport:
    checks = routing_checks(g, r)
    checks.update(extra_checks or {})
    return AnalysisReport(
        graph=GraphSummary.of(g),
        routing_source=source,
        bounds=compare(g, r),
        spectral=SpectralSummary.of(spectral),
        checks=checks,
        tv=None if tv is None else TVSeries.of(tv),
    )
