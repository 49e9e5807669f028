"""Outcome of checking the theorem on one graph."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Optional

from .hamsearch import VertexSequence
from .stars import StarWitness

if TYPE_CHECKING:
    from .extractor import ExtractionTrace

HYPOTHESIS_NOT_MET = "hypothesis_not_met"
HAM_PATH = "ham_path"
STAR = "star"
COUNTEREXAMPLE = "counterexample"

KINDS = (HYPOTHESIS_NOT_MET, HAM_PATH, STAR, COUNTEREXAMPLE)


@dataclass(frozen=True)
class Verdict:
    kind: str
    path: Optional[VertexSequence] = None
    star: Optional[StarWitness] = None
    graph6: Optional[str] = None
    failed_step: Optional[str] = None
    trace: Optional[ExtractionTrace] = field(default=None, compare=False)

    def to_json(self) -> dict:
        out: dict = {"kind": self.kind}
        if self.path is not None:
            out["path"] = list(self.path.vertices)
        if self.star is not None:
            out["star"] = self.star.to_json()
        if self.kind == COUNTEREXAMPLE:
            out["graph6"] = self.graph6
            out["failed_step"] = self.failed_step
        return out
