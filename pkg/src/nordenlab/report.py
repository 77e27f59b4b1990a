"""One-stop geometry report and its serialization.

:func:`compute_report` runs the full pipeline on an algebra —
classification, Lie form, Ricci, scalar curvature, the norm of grad J,
local symmetry, sectional curvatures of all coordinate planes, and the
Killing form — and returns a :class:`GeometryReport` of live objects.

:class:`ReportDocument` is the same content flattened to strings and
booleans, with text, CSV, and JSON renderings.  The JSON form
round-trips losslessly; all renderings are byte-deterministic because
polynomial text is canonical.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .curvature import (
    coordinate_plane,
    curvature_R,
    is_locally_symmetric,
    levi_civita,
    nabla_R,
    plane_type,
    ricci_and_scalar,
    sectional_curvature,
    square_norm_nabla_J,
)
from .errors import DegeneratePlaneError
from .linalg import PolyMatrix
from .norden import AlmostNordenAlgebra, ClassFlags, Covector
from .poly import Poly


@dataclass(frozen=True)
class GeometryReport:
    """All derived geometry of one algebra, as live polynomial objects.

    ``sectional`` holds one (plane-id, plane-type, value) triple per
    coordinate plane span{X_i, X_j}, i < j; the value is None exactly
    for metrically degenerate planes, where sectional curvature is
    undefined.
    """

    flags: ClassFlags
    theta: Covector
    ricci: PolyMatrix
    tau: Poly
    nabla_j_norm: Poly
    locally_symmetric: bool
    sectional: tuple[tuple[str, str, Poly | None], ...]
    killing_form: PolyMatrix


def compute_report(a: AlmostNordenAlgebra) -> GeometryReport:
    """Run every pipeline stage once and aggregate the results."""
    F = a.tensor_F()
    flags = a.classify(F)
    theta = a.lie_form(F)
    conn = levi_civita(a)
    R = curvature_R(a, conn)
    rho, tau = ricci_and_scalar(a, R)
    norm = square_norm_nabla_J(a, F)
    symmetric = is_locally_symmetric(nabla_R(a, conn, R))

    sectional = []
    for i in range(1, a.dim + 1):
        for j in range(i + 1, a.dim + 1):
            plane = coordinate_plane(a.dim, i, j)
            ptype = plane_type(a, plane)
            try:
                value = sectional_curvature(a, R, plane)
            except DegeneratePlaneError:
                value = None
            sectional.append((f"a{i}{j}", ptype, value))

    return GeometryReport(
        flags=flags,
        theta=theta,
        ricci=rho,
        tau=tau,
        nabla_j_norm=norm,
        locally_symmetric=symmetric,
        sectional=tuple(sectional),
        killing_form=a.algebra.killing_form(),
    )


def _bool_text(value: bool) -> str:
    return "true" if value else "false"


@dataclass(frozen=True)
class ReportDocument:
    """String-level report with deterministic renderings.

    Field layout matches the JSON object: classification (label and the
    four flags), theta (component texts), ricci and killing_form (row
    lists of entry texts), tau and nabla_j_norm (scalar texts),
    locally_symmetric, sectional (one object per plane, ``k`` null for
    degenerate planes).
    """

    classification: dict = field(default_factory=dict)
    theta: list = field(default_factory=list)
    ricci: list = field(default_factory=list)
    tau: str = "0"
    nabla_j_norm: str = "0"
    locally_symmetric: bool = True
    sectional: list = field(default_factory=list)
    killing_form: list = field(default_factory=list)

    @classmethod
    def from_report(cls, report: GeometryReport) -> ReportDocument:
        flags = report.flags
        return cls(
            classification={
                "label": flags.label(),
                "w0": flags.w0, "w1": flags.w1,
                "w2": flags.w2, "w3": flags.w3,
            },
            theta=[str(t) for t in report.theta],
            ricci=[[str(v) for v in row] for row in report.ricci.grid],
            tau=str(report.tau),
            nabla_j_norm=str(report.nabla_j_norm),
            locally_symmetric=report.locally_symmetric,
            sectional=[
                {"plane": pid, "type": ptype,
                 "k": None if value is None else str(value)}
                for pid, ptype, value in report.sectional
            ],
            killing_form=[[str(v) for v in row]
                          for row in report.killing_form.grid],
        )

    # -- renderings --------------------------------------------------------

    def to_json(self) -> str:
        payload = {
            "classification": self.classification,
            "theta": self.theta,
            "ricci": self.ricci,
            "tau": self.tau,
            "nabla_j_norm": self.nabla_j_norm,
            "locally_symmetric": self.locally_symmetric,
            "sectional": self.sectional,
            "killing_form": self.killing_form,
        }
        return json.dumps(payload, indent=2, ensure_ascii=False) + "\n"

    @classmethod
    def from_json(cls, text: str) -> ReportDocument:
        data = json.loads(text)
        expected = {"classification", "theta", "ricci", "tau",
                    "nabla_j_norm", "locally_symmetric", "sectional",
                    "killing_form"}
        missing = expected - set(data)
        if missing:
            raise ValueError(
                f"report document lacks keys: {sorted(missing)}")
        return cls(**{key: data[key] for key in expected})

    def to_csv(self) -> str:
        rows: list[tuple[str, str]] = []
        rows.append(("classification", self.classification["label"]))
        for flag in ("w0", "w1", "w2", "w3"):
            rows.append((flag, _bool_text(self.classification[flag])))
        for i, value in enumerate(self.theta, start=1):
            rows.append((f"theta_{i}", value))
        dim = len(self.ricci)
        for i in range(dim):
            for j in range(i, dim):
                rows.append((f"rho_{i + 1}{j + 1}", self.ricci[i][j]))
        rows.append(("tau", self.tau))
        rows.append(("nabla_j_norm", self.nabla_j_norm))
        rows.append(("locally_symmetric",
                     _bool_text(self.locally_symmetric)))
        for entry in self.sectional:
            rows.append((f"type({entry['plane']})", entry["type"]))
            value = entry["k"]
            rows.append((f"k({entry['plane']})",
                         "undefined" if value is None else value))
        for i in range(dim):
            for j in range(i, dim):
                rows.append((f"killing_{i + 1}{j + 1}",
                             self.killing_form[i][j]))
        return "".join(f"{key},{value}\n" for key, value in rows)

    def to_text(self) -> str:
        lines = [f"classification: {self.classification['label']}"]
        lines.append("  " + "  ".join(
            f"{flag}={_bool_text(self.classification[flag])}"
            for flag in ("w0", "w1", "w2", "w3")))
        lines.append("lie form theta: " + "  ".join(self.theta))
        lines.append("ricci:")
        lines.extend("  " + "  ".join(row) for row in self.ricci)
        lines.append(f"tau: {self.tau}")
        lines.append(f"square norm of grad J: {self.nabla_j_norm}")
        lines.append("locally symmetric: "
                     + _bool_text(self.locally_symmetric))
        lines.append("sectional curvatures:")
        for entry in self.sectional:
            value = entry["k"]
            shown = "undefined (degenerate plane)" if value is None else value
            lines.append(f"  {entry['plane']}  {entry['type']}  {shown}")
        lines.append("killing form:")
        lines.extend("  " + "  ".join(row) for row in self.killing_form)
        return "\n".join(lines) + "\n"


def document_for(a: AlmostNordenAlgebra) -> ReportDocument:
    """compute_report + flattening in one call."""
    return ReportDocument.from_report(compute_report(a))
