"""
Report builders shared by the ``fan`` command and the HTTP views.

Each builder takes the domain objects produced by a job serializer and
returns a ``Report``: a JSON-ready payload (machine format) plus the
lines of the human format.
"""
import enum
import json
import logging

import attrs
import sympy

from . import surface
from .classify import classify_trivalent
from .curve import FanMorphism, degree, degree_vector
from .intersection import corner_contributions, intersection_number, self_intersection
from .lattice import LatticeSimplexN, LatticeVec
from .obstruction import adjunction_bound, hessian_bound, rh_bound, rh_parameters
from .serializers import JOB_SERIALIZERS

logger = logging.getLogger(__name__)


def to_primitive(value):
    """Integers stay integers, rationals become "p/q", vectors become lists."""
    if isinstance(value, enum.Enum):
        return value.value
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, int):
        return value
    if isinstance(value, sympy.Rational):
        return int(value.p) if value.q == 1 else f"{value.p}/{value.q}"
    if isinstance(value, LatticeVec):
        return list(value.coords)
    if isinstance(value, LatticeSimplexN):
        return [list(v) for v in value.vertices]
    if isinstance(value, dict):
        return {_key(k): to_primitive(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, set, frozenset)):
        return [to_primitive(v) for v in value]
    raise TypeError(f"Cannot render {type(value).__name__} in a report.")


def _key(key):
    if isinstance(key, tuple):
        return ",".join(str(k) for k in key)
    return str(key)


@attrs.frozen
class Report:
    subcommand: str
    payload: dict = attrs.field(hash=False)
    lines: tuple = ()

    def data(self):
        return to_primitive({"subcommand": self.subcommand, **self.payload})

    def machine(self, indent=None):
        return json.dumps(self.data(), sort_keys=True, indent=indent)

    def human(self):
        return "\n".join(self.lines)

    def render(self, fmt="human", indent=None):
        return self.machine(indent) if fmt == "machine" else self.human()


def _obstruction_payload(report):
    return {
        "kind": report.kind,
        "value": report.lhs_value,
        "genus_bound": report.genus_bound,
        "verdict": report.verdict,
        "inputs": report.inputs_echo,
        "notes": list(report.notes),
    }


def _obstruction_lines(report):
    lines = [f"{report.kind.value} bound: {report.lhs_value}"]
    if report.genus_bound is not None:
        lines.append(f"genus bound: {report.genus_bound}")
    lines.append(f"verdict: {report.verdict.value}")
    lines.extend(f"note: {note}" for note in report.notes)
    return lines


def intersect_report(plane, a, b):
    value = intersection_number(a, b, plane)
    corners = corner_contributions(a, b, plane)
    payload = {
        "intersection": value,
        "degrees": [degree(a, plane), degree(b, plane)],
        "corners": corners,
    }
    lines = [f"C1.C2 = {value}", f"degrees: {degree(a, plane)}, {degree(b, plane)}"]
    lines += [f"corner p_{{{_key(k)}}}: {v}" for k, v in corners.items()]
    return Report("intersect", payload, tuple(lines))


def self_intersect_report(plane, curve):
    value = self_intersection(curve, plane)
    payload = {"self_intersection": value, "unique_if_approximable": value < 0}
    lines = [f"C.C = {value}"]
    if value < 0:
        lines.append("an approximation, if any, is unique")
    return Report("self-intersect", payload, tuple(lines))


def degree_report(plane, curve):
    value = degree(curve, plane)
    payload = {"degree": value, "by_reference_index": degree_vector(curve, plane)}
    return Report("degree", payload, (f"deg C = {value}",))


def adjunction_report(plane, curve):
    report = adjunction_bound(curve, plane)
    return Report("adjunction", _obstruction_payload(report), tuple(_obstruction_lines(report)))


def hessian_report(plane, morphism=None, curve=None):
    report = hessian_bound(morphism if morphism is not None else FanMorphism.of_curve(curve), plane)
    return Report("hessian", _obstruction_payload(report), tuple(_obstruction_lines(report)))


def rh_report(d, genus=0, k=None, l=None, plane=None, morphism=None):
    if plane is not None:
        k, l = rh_parameters(plane, morphism)
    report = rh_bound(d, k, l, genus)
    return Report("rh", _obstruction_payload(report), tuple(_obstruction_lines(report)))


def classify_report(plane, curve):
    verdict = classify_trivalent(curve, plane)
    payload = {
        "status": verdict.status,
        "case": verdict.case_tag,
        "witness": verdict.witness,
        "reasons": list(verdict.reasons),
        "details": verdict.details,
    }
    lines = [f"status: {verdict.status.value}"]
    if verdict.case_tag is not None:
        lines.append(f"case: {verdict.case_tag.value}")
    if verdict.witness:
        lines.append(f"witness: {verdict.witness}")
    lines.extend(f"reason: {reason}" for reason in verdict.reasons)
    return Report("classify", payload, tuple(lines))


def _anchor_payload(anchor):
    if isinstance(anchor, surface.PathologicalSimplex):
        return {"cell": anchor.cell, "params": list(anchor.params)}
    return {
        "kind": anchor.kind,
        "cells": list(anchor.cells),
        "shared_edge": list(anchor.shared_edge),
        "face": list(anchor.extra) if anchor.extra else None,
    }


def surface_scan_report(triangulation):
    simplices = surface.find_pathological_simplices(triangulation)
    pairs = surface.find_pathological_pairs(triangulation) if triangulation.d >= 4 else []
    verdicts = surface.line_verdicts(triangulation)
    summary = surface.scan_summary(triangulation, verdicts)
    payload = {
        "d": triangulation.d,
        "cells": len(triangulation.cells),
        "unimodular": triangulation.is_unimodular,
        "pathological_simplices": [
            {"cell": s.cell, "params": list(s.params), "face_assignment": s.face_assignment}
            for s in simplices
        ],
        "pathological_pairs": [_anchor_payload(p) for p in pairs],
        "verdicts": [
            {
                "line_kind": v.line_kind,
                "l": v.l,
                "status": v.status,
                "anchor": _anchor_payload(v.anchor),
                "reasons": list(v.reasons),
                "evidence": v.evidence,
                "applicable": v.applicable,
            }
            for v in verdicts
        ],
        "approximable_lines": summary.approximable_lines,
    }
    lines = [
        f"Δ_{triangulation.d}: {summary.cells} cells, "
        f"{'unimodular' if summary.unimodular else 'not unimodular'}",
        f"pathological simplices: {summary.pathological_simplices}",
        f"pathological pairs: {len(pairs)}",
    ]
    for simplex in simplices:
        lines.append(f"  {simplex.cell} params {simplex.params}")
    for verdict in verdicts:
        if verdict.l is None:
            member = "isolated line"
        else:
            member = "L_0" if verdict.l == 0 else "L_l, l > 0"
        lines.append(f"  {member}: {verdict.status.value}")
    lines.append(f"approximable lines: {summary.approximable_lines}")
    if not summary.unimodular:
        lines.append("verdicts do not apply: the triangulation is not unimodular")
    return Report("surface-scan", payload, tuple(lines))


def surface_subdivide_report(triangulation):
    payload = {
        "d": triangulation.d,
        "cells": list(triangulation.cells),
        "unimodular": triangulation.is_unimodular,
        "volume": triangulation.volume_sum(),
    }
    lines = [f"Δ_{triangulation.d}: {len(triangulation.cells)} cells, volume {triangulation.volume_sum()}"]
    lines += [f"  {cell}" for cell in triangulation.cells]
    return Report("surface-subdivide", payload, tuple(lines))


BUILDERS = {
    "intersect": intersect_report,
    "self-intersect": self_intersect_report,
    "degree": degree_report,
    "adjunction": adjunction_report,
    "hessian": hessian_report,
    "rh": rh_report,
    "classify": classify_report,
    "surface-scan": surface_scan_report,
    "surface-subdivide": surface_subdivide_report,
}


def compute(subcommand, documents):
    """
    Validate ``documents`` with the job serializer of ``subcommand`` and
    build its report. Raises DRF ``ValidationError`` or ``TropicalError``.
    """
    serializer = JOB_SERIALIZERS[subcommand](data=documents)
    serializer.is_valid(raise_exception=True)
    inputs = serializer.save()
    logger.info("Running %s on %s", subcommand, ", ".join(sorted(inputs)))
    return BUILDERS[subcommand](**inputs)
