"""Report assembly and rendering.

A Report bundles one document's diagnostics and malady findings with the
configuration that produced them. It renders two ways: a line-oriented human
form (one finding per line, grep-friendly) and a JSON machine form that
parses back into an equal Report.
"""

from __future__ import annotations

import dataclasses
import json
from dataclasses import dataclass

from .config import AnalysisConfig
from .detectors import Diagnostic, Severity
from .document import Span


@dataclass(frozen=True)
class TreatmentHint:
    rule_id: str
    text: str
    section: str  # where the underlying writing guideline is developed


_TREATMENTS = {
    "S101": TreatmentHint("S101", "Distill the sentence: cut filler phrases "
                          "to single words and keep one thought per sentence.",
                          "§1.1"),
    "S102": TreatmentHint("S102", "Let the action be the verb: turn the "
                          "noun-made actions back into verbs and retire the "
                          "'to be'.", "§1.1"),
    "S103": TreatmentHint("S103", "Reunite subject and verb: move insertions "
                          "out of the core and trim the lead-in clauses.",
                          "§1.1"),
    "S201": TreatmentHint("S201", "Hand off between sentences: open with a "
                          "connector, repeat the key term, or point back "
                          "with this/these.", "§1.2"),
    "S301": TreatmentHint("S301", "Split the paragraph: one point per "
                          "paragraph, stated in its first sentence.", "§1.3"),
    "S302": TreatmentHint("S302", "Open with the point: state what the "
                          "numbers mean before giving the numbers.", "§2.2"),
    "S401": TreatmentHint("S401", "Carry the storyline: repeat a key term of "
                          "the previous opener in the next one.", "§1.4"),
    "S501": TreatmentHint("S501", "Shorten by cutting whole chunks: "
                          "sections, paragraphs, sentences.", "§1.5"),
    "S601": TreatmentHint("S601", "Cut footnotes: fold the load-bearing ones "
                          "into the text and drop the rest.", "§1.6"),
    "S701": TreatmentHint("S701", "Rest the intensity words: if everything "
                          "is important, nothing is.", "§2.1"),
    "S702": TreatmentHint("S702", "Trade praise for evidence: show the "
                          "result that makes the claim and let readers grade "
                          "it.", "§2.4"),
}


def treatment_for(rule_id: str) -> TreatmentHint:
    """Hint for a rule id; raises KeyError for unknown rules."""
    return _TREATMENTS[rule_id]


@dataclass(frozen=True)
class MaladySummary:
    kind: str
    strength: int
    evidence_rule_ids: tuple[str, ...]
    narrative: str


@dataclass(frozen=True)
class Report:
    document: str
    config: AnalysisConfig
    diagnostics: tuple[Diagnostic, ...]
    maladies: tuple[MaladySummary, ...]

    @property
    def summary(self) -> dict[str, int]:
        counts: dict[str, int] = {}
        for diag in self.diagnostics:
            counts[diag.rule_id] = counts.get(diag.rule_id, 0) + 1
        return dict(sorted(counts.items()))


def build_report(document: str, config: AnalysisConfig, diagnostics,
                 findings) -> Report:
    """Assemble a Report from detector and malady output."""
    return Report(
        document=document,
        config=config,
        diagnostics=tuple(diagnostics),
        maladies=tuple(
            MaladySummary(
                f.kind.value, f.strength,
                tuple(ref.rule_id for ref in f.evidence), f.narrative,
            )
            for f in findings
        ),
    )


def _fmt_number(value) -> str:
    if isinstance(value, float):
        return f"{value:g}"
    return str(value)


def render_human(report: Report) -> str:
    if not report.diagnostics and not report.maladies:
        return f"{report.document}: no findings\n"
    lines = [
        f"{report.document}: {len(report.diagnostics)} finding(s), "
        f"{len(report.maladies)} malady(ies)"
    ]
    for diag in report.diagnostics:
        hint = treatment_for(diag.rule_id)
        lines.append(
            f"{report.document}:{diag.span.line}:{diag.span.column} "
            f"{diag.rule_id} {diag.message} "
            f"({_fmt_number(diag.measured)}/{_fmt_number(diag.threshold)}) "
            f"[treat: {hint.section}]"
        )
    for malady in report.maladies:
        ids = ", ".join(malady.evidence_rule_ids)
        lines.append(
            f"  {malady.kind} (strength {malady.strength}): "
            f"{malady.narrative} [evidence: {ids}]"
        )
    return "\n".join(lines) + "\n"


def _span_payload(span: Span) -> dict:
    return {
        "start_byte": span.start_byte,
        "end_byte": span.end_byte,
        "line": span.line,
        "column": span.column,
    }


def render_machine(report: Report) -> str:
    payload = {
        "document": report.document,
        "config": dataclasses.asdict(report.config),
        "diagnostics": [
            {
                "rule_id": d.rule_id,
                "severity": d.severity.value,
                **_span_payload(d.span),
                "measured": d.measured,
                "threshold": d.threshold,
                "message": d.message,
                "evidence": [_span_payload(s) for s in d.evidence],
            }
            for d in report.diagnostics
        ],
        "maladies": [
            {
                "kind": m.kind,
                "strength": m.strength,
                "evidence_rule_ids": list(m.evidence_rule_ids),
                "narrative": m.narrative,
            }
            for m in report.maladies
        ],
    }
    return json.dumps(payload, indent=2, ensure_ascii=False) + "\n"


def _span_from(payload: dict) -> Span:
    return Span(payload["start_byte"], payload["end_byte"],
                payload["line"], payload["column"])


def parse_machine(text: str) -> Report:
    """Inverse of render_machine."""
    data = json.loads(text)
    diagnostics = tuple(
        Diagnostic(
            d["rule_id"],
            Severity(d["severity"]),
            _span_from(d),
            d["measured"],
            d["threshold"],
            d["message"],
            tuple(_span_from(e) for e in d["evidence"]),
        )
        for d in data["diagnostics"]
    )
    maladies = tuple(
        MaladySummary(m["kind"], m["strength"],
                      tuple(m["evidence_rule_ids"]), m["narrative"])
        for m in data["maladies"]
    )
    return Report(data["document"], AnalysisConfig(**data["config"]),
                  diagnostics, maladies)
