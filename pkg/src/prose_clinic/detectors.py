"""Symptom detectors.

Each rule is a pure function of (Document, AnalysisConfig, Lexicon) returning
located diagnostics:

=====  ========================================================
S101   sentence longer than the word guideline
S102   be-form plus nominalizations hiding the action
S103   subject-verb core interrupted or delayed
S201   sentence with no explicit link to its predecessor
S301   paragraph with too many sentences
S302   paragraph that opens on a numeric detail
S401   paragraph openers that drop every key term
S501   document longer than the configured page norm
S601   more footnotes than the fair count for the page estimate
S701   an intensity word family used more than once per page
S702   superlative density above the accepted rate
=====  ========================================================
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .config import AnalysisConfig
from .document import (
    NUMBER,
    PUNCTUATION,
    WORD,
    Document,
    Sentence,
    Span,
    Token,
    estimate_pages,
)
from .lexicon import ConnectorClass, Lexicon, default_lexicon, stem


class Severity(enum.Enum):
    INFO = "info"
    WARNING = "warning"


@dataclass(frozen=True)
class Diagnostic:
    rule_id: str
    severity: Severity
    span: Span
    measured: int | float
    threshold: int | float
    message: str
    evidence: tuple[Span, ...] = ()


def _words(tokens) -> list[Token]:
    return [t for t in tokens if t.kind == WORD]


def _countable(tokens) -> list[Token]:
    # Same notion of "word" as sentence word counts: words plus numbers.
    return [t for t in tokens if t.kind in (WORD, NUMBER)]


def _content_stems(sentence: Sentence, lexicon: Lexicon) -> set[str]:
    return {
        stem(t.text)
        for t in sentence.tokens
        if t.kind == WORD and not lexicon.is_stopword(t.text)
    }


def _document_span(doc: Document) -> Span:
    return Span(0, len(doc.source), 1, 1)


def _cover(tokens) -> Span:
    first, last = tokens[0].span, tokens[-1].span
    return Span(first.start_byte, last.end_byte, first.line, first.column)


def detect_long_sentence(doc: Document, cfg: AnalysisConfig,
                         lexicon: Lexicon | None = None) -> list[Diagnostic]:
    """S101: sentence word count above max_sentence_words."""
    out = []
    for sentence in doc.iter_sentences():
        n = sentence.word_count
        if n > cfg.max_sentence_words:
            out.append(Diagnostic(
                "S101", Severity.WARNING, sentence.span, n, cfg.max_sentence_words,
                f"sentence has {n} words; the guideline is at most "
                f"{cfg.max_sentence_words}",
            ))
    return out


def detect_hidden_verb(doc: Document, cfg: AnalysisConfig,
                       lexicon: Lexicon | None = None) -> list[Diagnostic]:
    """S102: a be-form carrying nominalizations, or a "the <gerund> of"
    construction, instead of a strong verb."""
    lexicon = lexicon or default_lexicon()
    out = []
    for sentence in doc.iter_sentences():
        words = _words(sentence.tokens)
        be_tokens = [t for t in words if lexicon.is_be_form(t.text)]
        if not be_tokens:
            continue
        noms = [t for t in words if lexicon.is_nominalization(t.text)]
        gerund = None
        for i in range(len(words) - 2):
            mid = words[i + 1].text.lower()
            if (words[i].text.lower() == "the" and words[i + 2].text.lower() == "of"
                    and mid.endswith("ing") and len(mid) >= 5):
                gerund = _cover(words[i:i + 3])
                break
        signals = len(noms) + (2 if gerund else 0)
        if signals < 2:
            continue
        evidence = [be_tokens[0].span] + [t.span for t in noms]
        if gerund:
            evidence.append(gerund)
        out.append(Diagnostic(
            "S102", Severity.INFO, sentence.span, signals, 2,
            "a form of 'to be' plus noun-made actions hides the verb; "
            "let the action be the verb",
            tuple(evidence),
        ))
    return out


def _comma_segments(sentence: Sentence) -> list[list[Token]]:
    segments: list[list[Token]] = [[]]
    for token in sentence.tokens:
        if token.kind == PUNCTUATION and token.text == ",":
            segments.append([])
        else:
            segments[-1].append(token)
    return segments


def _qualifies_as_lead(words: list[Token], lexicon: Lexicon) -> bool:
    # A lead segment opens with a subordinator or an -ing form, possibly
    # behind one extra word ("even though ...", "and listening ...").
    for token in words[:2]:
        w = token.text.lower()
        if lexicon.connector_class(w) is ConnectorClass.SUBORDINATING:
            return True
        if w.endswith("ing") and len(w) >= 5:
            return True
    return False


def detect_broken_core(doc: Document, cfg: AnalysisConfig,
                       lexicon: Lexicon | None = None) -> list[Diagnostic]:
    """S103: the subject-verb core is interrupted by a long comma insertion,
    or delayed past max_delay_words of leading clauses."""
    lexicon = lexicon or default_lexicon()
    out = []
    for sentence in doc.iter_sentences():
        segments = _comma_segments(sentence)
        if len(segments) >= 3:
            prefix = _countable(segments[0])
            if (1 <= len(prefix) <= cfg.max_core_prefix_tokens
                    and lexicon.connector_class(prefix[0].text) is ConnectorClass.NONE):
                insertion = _countable(segments[1])
                resumes = any(_countable(seg) for seg in segments[2:])
                if len(insertion) >= cfg.min_insertion_words and resumes:
                    out.append(Diagnostic(
                        "S103", Severity.INFO, sentence.span,
                        len(insertion), cfg.min_insertion_words,
                        f"subject-verb core interrupted by a "
                        f"{len(insertion)}-word insertion",
                        (_cover(insertion),),
                    ))
        if len(segments) >= 2:
            total = 0
            lead_spans = []
            for seg in segments:
                countable = _countable(seg)
                if countable and _qualifies_as_lead(_words(seg), lexicon):
                    total += len(countable)
                    lead_spans.append(_cover(countable))
                else:
                    break
            if lead_spans and total >= cfg.max_delay_words:
                out.append(Diagnostic(
                    "S103", Severity.INFO, sentence.span,
                    total, cfg.max_delay_words,
                    f"subject-verb core delayed by {total} words of "
                    f"leading clauses",
                    tuple(lead_spans),
                ))
    return out


def _is_linked(prev: Sentence, cur: Sentence, cfg: AnalysisConfig,
               lexicon: Lexicon) -> bool:
    window = _words(cur.tokens)[: cfg.link_window_tokens]
    if any(lexicon.connector_class(t.text) is not ConnectorClass.NONE for t in window):
        return True
    if any(t.kind == WORD and lexicon.is_demonstrative(t.text) for t in cur.tokens):
        return True
    return bool(_content_stems(prev, lexicon) & _content_stems(cur, lexicon))


def detect_missing_link(doc: Document, cfg: AnalysisConfig,
                        lexicon: Lexicon | None = None) -> list[Diagnostic]:
    """S201: a sentence that neither opens with a connector, nor repeats a
    content stem of its predecessor, nor points back with a demonstrative.
    A bare pronoun does not count as a link."""
    lexicon = lexicon or default_lexicon()
    out = []
    for paragraph in doc.iter_paragraphs():
        for prev, cur in zip(paragraph.sentences, paragraph.sentences[1:]):
            if not _is_linked(prev, cur, cfg, lexicon):
                out.append(Diagnostic(
                    "S201", Severity.WARNING, cur.span, 0, 1,
                    "no explicit link to the previous sentence (no leading "
                    "connector, repeated key term, or demonstrative)",
                    (prev.span, cur.span),
                ))
    return out


def detect_long_paragraph(doc: Document, cfg: AnalysisConfig,
                          lexicon: Lexicon | None = None) -> list[Diagnostic]:
    """S301: paragraph with more sentences than the chunk norm."""
    out = []
    for paragraph in doc.iter_paragraphs():
        n = len(paragraph.sentences)
        if n > cfg.max_paragraph_sentences:
            out.append(Diagnostic(
                "S301", Severity.WARNING, paragraph.span, n,
                cfg.max_paragraph_sentences,
                f"paragraph has {n} sentences; keep one point per paragraph "
                f"(about {cfg.max_paragraph_sentences} sentences)",
            ))
    return out


def detect_leading_detail(doc: Document, cfg: AnalysisConfig,
                          lexicon: Lexicon | None = None) -> list[Diagnostic]:
    """S302: a paragraph of four or more sentences whose first sentence leads
    with numbers and never signals a point (no demonstrative, no connector in
    the opening window)."""
    lexicon = lexicon or default_lexicon()
    out = []
    for paragraph in doc.iter_paragraphs():
        if len(paragraph.sentences) < 4:
            continue
        first = paragraph.first_sentence
        numbers = [t for t in first.tokens if t.kind == NUMBER]
        if not numbers:
            continue
        if any(t.kind == WORD and lexicon.is_demonstrative(t.text) for t in first.tokens):
            continue
        window = _words(first.tokens)[: cfg.link_window_tokens]
        if any(lexicon.connector_class(t.text) is not ConnectorClass.NONE for t in window):
            continue
        out.append(Diagnostic(
            "S302", Severity.INFO, first.span, len(numbers), 0,
            "paragraph opens on numeric detail; open with the point the "
            "numbers support",
            tuple(t.span for t in numbers),
        ))
    return out


def detect_storyline_break(doc: Document, cfg: AnalysisConfig,
                           lexicon: Lexicon | None = None) -> list[Diagnostic]:
    """S401: adjacent paragraphs in a section whose first sentences share no
    content stem; the storyline of openers breaks there."""
    lexicon = lexicon or default_lexicon()
    out = []
    for section in doc.sections:
        paragraphs = section.paragraphs
        for prev, cur in zip(paragraphs, paragraphs[1:]):
            a = _content_stems(prev.first_sentence, lexicon)
            b = _content_stems(cur.first_sentence, lexicon)
            if not a & b:
                out.append(Diagnostic(
                    "S401", Severity.INFO, cur.first_sentence.span, 0, 1,
                    "paragraph opener carries no key term over from the "
                    "previous opener",
                    (prev.first_sentence.span, cur.first_sentence.span),
                ))
    return out


def detect_overlong_document(doc: Document, cfg: AnalysisConfig,
                             lexicon: Lexicon | None = None) -> list[Diagnostic]:
    """S501: page estimate above max_pages. Dormant unless max_pages is set."""
    if cfg.max_pages is None:
        return []
    pages = estimate_pages(doc, cfg.words_per_page)
    if pages <= cfg.max_pages:
        return []
    return [Diagnostic(
        "S501", Severity.INFO, _document_span(doc), pages, cfg.max_pages,
        f"estimated {pages:.1f} pages exceeds the norm of {cfg.max_pages:g}; "
        f"cut chunks, not words",
    )]


def detect_footnote_overload(doc: Document, cfg: AnalysisConfig,
                             lexicon: Lexicon | None = None) -> list[Diagnostic]:
    """S601: more footnotes than the fair count (about footnote_ratio per
    page, rounded to the nearest integer, halves up)."""
    count = len(doc.footnotes)
    if count == 0:
        return []
    pages = estimate_pages(doc, cfg.words_per_page)
    fair = math.floor(pages * cfg.footnote_ratio + 0.5)
    if count <= fair:
        return []
    return [Diagnostic(
        "S601", Severity.WARNING, _document_span(doc), count, fair,
        f"{count} footnotes for an estimated {pages:.1f} pages; a fair count "
        f"is {fair}",
        tuple(n.marker_span for n in doc.footnotes),
    )]


def detect_intensity_overuse(doc: Document, cfg: AnalysisConfig,
                             lexicon: Lexicon | None = None) -> list[Diagnostic]:
    """S701: an intensity word family (adjective and adverb pooled) used more
    often than intensity_per_page."""
    lexicon = lexicon or default_lexicon()
    pages = estimate_pages(doc, cfg.words_per_page)
    if pages <= 0:
        return []
    families: dict[str, list[Token]] = {}
    for token in doc.iter_tokens():
        if token.kind == WORD and lexicon.is_intensity_word(token.text):
            families.setdefault(lexicon.intensity_family(token.text), []).append(token)
    out = []
    for family, tokens in families.items():
        rate = len(tokens) / pages
        if rate > cfg.intensity_per_page:
            out.append(Diagnostic(
                "S701", Severity.INFO, tokens[0].span, rate, cfg.intensity_per_page,
                f"'{family}' and kin appear {len(tokens)} times in an estimated "
                f"{pages:.1f} pages; swapping in synonyms will not help",
                tuple(t.span for t in tokens),
            ))
    return out


def detect_superlative_density(doc: Document, cfg: AnalysisConfig,
                               lexicon: Lexicon | None = None) -> list[Diagnostic]:
    """S702: superlatives (including "most <content word>") denser than
    superlative_per_page; praise standing in for argument."""
    lexicon = lexicon or default_lexicon()
    pages = estimate_pages(doc, cfg.words_per_page)
    if pages <= 0:
        return []
    spans: list[Span] = []
    for sentence in doc.iter_sentences():
        words = _words(sentence.tokens)
        for i, token in enumerate(words):
            if lexicon.is_superlative(token.text):
                spans.append(token.span)
            elif (token.text.lower() == "most" and i + 1 < len(words)
                  and not lexicon.is_stopword(words[i + 1].text)):
                spans.append(_cover(words[i:i + 2]))
    if not spans:
        return []
    rate = len(spans) / pages
    if rate <= cfg.superlative_per_page:
        return []
    return [Diagnostic(
        "S702", Severity.INFO, spans[0], rate, cfg.superlative_per_page,
        f"{len(spans)} superlatives in an estimated {pages:.1f} pages reads "
        f"as rhetoric; answer the reader's logical questions instead",
        tuple(spans),
    )]


RULES = {
    "S101": detect_long_sentence,
    "S102": detect_hidden_verb,
    "S103": detect_broken_core,
    "S201": detect_missing_link,
    "S301": detect_long_paragraph,
    "S302": detect_leading_detail,
    "S401": detect_storyline_break,
    "S501": detect_overlong_document,
    "S601": detect_footnote_overload,
    "S701": detect_intensity_overuse,
    "S702": detect_superlative_density,
}

RULE_IDS = tuple(RULES)


def run_all(doc: Document, cfg: AnalysisConfig, lexicon: Lexicon | None = None,
            rules=None) -> list[Diagnostic]:
    """Run the selected detectors (all by default) and return diagnostics
    sorted by span start, then rule id."""
    lexicon = lexicon or default_lexicon()
    if rules is None:
        selected = RULE_IDS
    else:
        wanted = set(rules)
        unknown = wanted - set(RULE_IDS)
        if unknown:
            raise ValueError(f"unknown rule id(s): {', '.join(sorted(unknown))}")
        selected = tuple(r for r in RULE_IDS if r in wanted)
    diagnostics: list[Diagnostic] = []
    for rule_id in selected:
        diagnostics.extend(RULES[rule_id](doc, cfg, lexicon))
    diagnostics.sort(key=lambda d: (d.span.start_byte, d.rule_id))
    return diagnostics
