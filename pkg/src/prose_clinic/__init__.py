"""prose-clinic: locate surface writing symptoms in a manuscript and infer
the maladies behind them."""

__version__ = "0.1.0"

from .config import AnalysisConfig, ConfigError, load_config, parse_config_text
from .detectors import RULE_IDS, RULES, Diagnostic, Severity, run_all
from .document import (
    Document,
    DocumentStructureError,
    Footnote,
    Paragraph,
    Section,
    Sentence,
    Span,
    Token,
    count_words,
    estimate_pages,
    extract_footnotes,
    parse_document,
    segment_sentences,
    tokenize,
)
from .lexicon import (
    ConnectorClass,
    Lexicon,
    LexiconError,
    default_lexicon,
    load_lexicon_extensions,
    stem,
)
from .maladies import (
    EvidenceRef,
    KeywordProfile,
    MaladyFinding,
    MaladyKind,
    extract_keywords,
    infer_maladies,
    section_relevance,
)
from .reporting import (
    MaladySummary,
    Report,
    TreatmentHint,
    build_report,
    parse_machine,
    render_human,
    render_machine,
    treatment_for,
)

__all__ = [
    "__version__",
    "AnalysisConfig",
    "ConfigError",
    "ConnectorClass",
    "Diagnostic",
    "Document",
    "DocumentStructureError",
    "EvidenceRef",
    "Footnote",
    "KeywordProfile",
    "Lexicon",
    "LexiconError",
    "MaladyFinding",
    "MaladyKind",
    "MaladySummary",
    "Paragraph",
    "Report",
    "RULES",
    "RULE_IDS",
    "Section",
    "Sentence",
    "Severity",
    "Span",
    "Token",
    "TreatmentHint",
    "build_report",
    "count_words",
    "default_lexicon",
    "estimate_pages",
    "extract_footnotes",
    "extract_keywords",
    "infer_maladies",
    "load_config",
    "load_lexicon_extensions",
    "parse_config_text",
    "parse_document",
    "parse_machine",
    "render_human",
    "render_machine",
    "run_all",
    "section_relevance",
    "segment_sentences",
    "stem",
    "tokenize",
    "treatment_for",
]
