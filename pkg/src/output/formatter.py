import json
from fractions import Fraction
from typing import Any, Iterable, List, Optional, Sequence

from ..cartier.modules import FractionalSubmodule
from ..testmod.jumps import JumpReport
from ..testmod.test_module import GradedPiece
from ..utils.errors import UsageError
from ..verify.acceptance import SuiteReport
from ..vfilt.axioms import AxiomReport
from ..vfilt.compare import CompareReport
from ..vfilt.graph import GraphWitness
from ..vfilt.table import FiltrationTable


FORMATS = ("json", "tsv")


class ResultFormatter:
    """Renders kernel results as sorted-key JSON or tab-separated rows."""

    def __init__(self, fmt: str = "json"):
        if fmt not in FORMATS:
            raise UsageError(f"unknown output format {fmt!r}, expected one of {FORMATS}")
        self.fmt = fmt

    def _json(self, payload: Any) -> str:
        return json.dumps(payload, sort_keys=True, ensure_ascii=False)

    def _tsv(self, header: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
        lines = ["\t".join(header)]
        lines.extend("\t".join(str(cell) for cell in row) for row in rows)
        return "\n".join(lines)

    def format_submodule(self, N: FractionalSubmodule) -> str:
        if self.fmt == "json":
            return self._json(N.to_dict())
        return self._tsv(["shift", "generator"], [(N.shift, g) for g in N.gb.lines()])

    def format_jumps(self, report: JumpReport) -> str:
        if self.fmt == "json":
            return self._json(report.to_dict())
        rows: List[Sequence[Any]] = [("jump", j, "") for j in report.points]
        rows.extend(("unresolved", a, b) for a, b in report.unresolved)
        return self._tsv(["kind", "from", "to"], rows)

    def format_fpt(self, value: Optional[Fraction], f) -> str:
        text = str(value) if value is not None else None
        if self.fmt == "json":
            return self._json({"f": str(f), "fpt": text})
        return self._tsv(["f", "fpt"], [(f, text if text is not None else "none")])

    def format_graded(self, piece: GradedPiece) -> str:
        if self.fmt == "json":
            return self._json(piece.to_dict())
        rows = [
            ("numerator", piece.numerator.shift, ", ".join(piece.numerator.gb.lines())),
            ("denominator", piece.denominator.shift, ", ".join(piece.denominator.gb.lines())),
        ]
        return self._tsv(["part", "shift", "basis"], rows)

    def format_table(self, table: FiltrationTable) -> str:
        if self.fmt == "json":
            return self._json(table.to_dict())
        rows = [
            (row["from"], row["to"], row["shift"], ", ".join(row["basis"]))
            for row in table.rows()
        ]
        return self._tsv(["from", "to", "shift", "basis"], rows)

    def _entries(self, passed: bool, label: str, entries: List[dict]) -> str:
        if self.fmt == "json":
            return self._json({"label": label, "passed": passed, "entries": entries})
        rows = [(e["axiom"], e["t"], e["status"], e["witness"], e["notes"]) for e in entries]
        return self._tsv(["check", "t", "status", "witness", "notes"], rows)

    def format_axioms(self, report: AxiomReport) -> str:
        return self._entries(report.passed, report.label, report.to_list())

    def format_compare(self, report: CompareReport) -> str:
        return self._entries(report.passed, report.descriptor.label(), report.to_list())

    def format_counterexample(self, witness: GraphWitness) -> str:
        if self.fmt == "json":
            return self._json(witness.to_dict())
        return self._tsv(
            ["p", "s", "verdict"], [(witness.p, witness.s, witness.verdict)]
        )

    def format_suite(self, report: SuiteReport) -> str:
        if self.fmt == "json":
            return self._json({"passed": report.passed, "results": report.rows()})
        rows = [
            (r["id"], r["char"], r["status"], r["anchor"], r["detail"])
            for r in report.rows()
        ]
        return self._tsv(["id", "char", "status", "anchor", "detail"], rows)
