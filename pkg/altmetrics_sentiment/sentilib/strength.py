#!/usr/bin/env python3
# MIT License
#
# Copyright (c) 2024 sentilib developers
#
# Permission is hereby granted, free of charge, to any person obtaining a copy
# of this software and associated documentation files (the "Software"), to deal
# in the Software without restriction, including without limitation the rights
# to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
# copies of the Software, and to permit persons to whom the Software is
# furnished to do so, subject to the following conditions:
#
# The above copyright notice and this permission notice shall be included in all
# copies or substantial portions of the Software.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
# IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
# FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
# AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
# LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
# OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN THE
# SOFTWARE.
"""
Lexical sentiment strength scoring.

Every text gets a positive strength in 1..5 and a negative strength in
-5..-1 at the same time.  Scoring is driven by a :py:class:`StrengthLexicon`
holding signed term strengths, booster words, negation words and the set
of letters that may legitimately appear doubled.
"""
from __future__ import annotations

import logging
import re
from concurrent.futures import Executor
from functools import lru_cache
from types import MappingProxyType
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Set, Tuple

from altmetrics_sentiment.sentilib.constants import Constants
from altmetrics_sentiment.utils.utils import Utils

ALLOWED_DOUBLES = frozenset("eolstfprmncdg")

TOKEN_PATTERN = re.compile(r"[^\W_]+(?:'[^\W_]+)*|[.!?]+")
TERMINATORS = ".!?"

_FINAL_LETTER_RUN = re.compile(r"([^\W\d_])\1{2,}$")
_LETTER_RUN = re.compile(r"([^\W\d_])\1{2,}")
_LETTER_DOUBLE = re.compile(r"([^\W\d_])\1")


class LexiconException(Exception):
    """
    Invalid or unreadable strength lexicon.
    """

    pass


class SentimentScore:
    """
    Dual sentiment strength of a text.
    """

    def __init__(self, positive: int = 1, negative: int = -1):
        """
        :param positive: positive strength, 1..5
        :type positive: int
        :param negative: negative strength, -5..-1
        :type negative: int
        """
        if not 1 <= positive <= Constants.MAX_STRENGTH:
            raise ValueError(f"positive strength out of range: {positive}")
        if not -Constants.MAX_STRENGTH <= negative <= -1:
            raise ValueError(f"negative strength out of range: {negative}")
        self.positive = positive
        self.negative = negative

    def __eq__(self, other):
        if isinstance(other, SentimentScore):
            return (self.positive, self.negative) == (other.positive, other.negative)
        if isinstance(other, tuple):
            return (self.positive, self.negative) == other
        return NotImplemented

    def __hash__(self):
        return hash((self.positive, self.negative))

    def __iter__(self):
        return iter((self.positive, self.negative))

    def __repr__(self):
        return f"SentimentScore({self.positive}, {self.negative})"

    def to_dict(self) -> dict:
        return {"positive": self.positive, "negative": self.negative}


def classify_trinary(score: SentimentScore) -> str:
    """
    Derive the trinary label of a score.

    The stronger polarity wins; equal magnitudes are neutral.

    :param score: dual score
    :type score: SentimentScore

    :return: ``positive``, ``negative`` or ``neutral``
    :rtype: str
    """
    positive, negative = score
    if positive > -negative:
        return Constants.POSITIVE
    if -negative > positive:
        return Constants.NEGATIVE
    return Constants.NEUTRAL


@lru_cache(maxsize=65536)
def _correct(token: str, allowed_doubles: FrozenSet[str]) -> str:
    token = _FINAL_LETTER_RUN.sub(r"\1", token)
    token = _LETTER_RUN.sub(r"\1\1", token)
    return _LETTER_DOUBLE.sub(
        lambda m: m.group(0) if m.group(1) in allowed_doubles else m.group(1),
        token,
    )


def correct_spelling(token: str, allowed_doubles: Iterable[str] = None) -> str:
    """
    Undo emphatic letter repetition.

    A run of more than two letters ending the token is reduced to one
    letter, other runs of more than two are reduced to two.  A remaining
    double of a letter outside ``allowed_doubles`` is reduced to one.

    :param token: lowercase token
    :type token: str
    :param allowed_doubles: letters that commonly double in English
    :type allowed_doubles: Iterable[str]

    :return: corrected token
    :rtype: str
    """
    if allowed_doubles is None:
        allowed_doubles = ALLOWED_DOUBLES
    elif not isinstance(allowed_doubles, frozenset):
        allowed_doubles = frozenset(allowed_doubles)
    return _correct(token, allowed_doubles)


def _check_strength(value, low: int = Constants.MIN_STRENGTH) -> bool:
    return (
        isinstance(value, int)
        and not isinstance(value, bool)
        and low <= abs(value) <= Constants.MAX_STRENGTH
    )


class StrengthLexicon:
    """
    Signed term strengths plus booster words, negation words, emoticon
    strengths and the allowed double letters.

    A lexicon does not change after construction; use
    :py:meth:`with_strengths` to derive an adjusted copy.
    """

    def __init__(
        self,
        term_strengths: Mapping[str, int] = None,
        boosters: Mapping[str, int] = None,
        inverters: Iterable[str] = None,
        emoticons: Mapping[str, int] = None,
        allowed_doubles: Iterable[str] = None,
    ):
        """
        :raises LexiconException: if a strength is out of range or the term,
            booster and inverter sets overlap
        """
        term_strengths = dict(term_strengths or {})
        boosters = dict(boosters or {})
        inverters = frozenset(inverters or ())
        emoticons = dict(emoticons or {})

        bad = [t for t, s in term_strengths.items() if not _check_strength(s)]
        if bad:
            raise LexiconException(f"Strengths outside +/-2..5 for {sorted(bad)}")
        bad = [t for t, s in emoticons.items() if not _check_strength(s, low=1)]
        if bad:
            raise LexiconException(f"Emoticon strengths outside +/-1..5 for {bad}")
        bad = [t for t, d in boosters.items() if not isinstance(d, int) or d == 0]
        if bad:
            raise LexiconException(f"Booster deltas must be non-zero ints: {bad}")

        overlap = (
            (set(term_strengths) & set(boosters))
            | (set(term_strengths) & inverters)
            | (set(boosters) & inverters)
        )
        if overlap:
            raise LexiconException(
                f"Terms, boosters and inverters overlap: {sorted(overlap)}"
            )

        self.term_strengths = MappingProxyType(term_strengths)
        self.boosters = MappingProxyType(boosters)
        self.inverters = inverters
        self.emoticons = MappingProxyType(emoticons)
        self.allowed_doubles = frozenset(
            ALLOWED_DOUBLES if allowed_doubles is None else allowed_doubles
        )

    def __len__(self):
        return len(self.term_strengths)

    def __eq__(self, other):
        if not isinstance(other, StrengthLexicon):
            return NotImplemented
        return self.to_dict() == other.to_dict()

    def correct(self, token: str) -> str:
        return _correct(token, self.allowed_doubles)

    def strength(self, token: str) -> Optional[int]:
        """
        Strength of a token, trying the token as written first and then its
        spelling-corrected form.

        :return: signed strength or ``None``
        :rtype: int
        """
        if token in self.emoticons:
            return self.emoticons[token]
        value = self.term_strengths.get(token)
        if value is None:
            value = self.term_strengths.get(self.correct(token))
        return value

    def booster(self, token: str) -> Optional[int]:
        value = self.boosters.get(token)
        if value is None:
            value = self.boosters.get(self.correct(token))
        return value

    def is_inverter(self, token: str) -> bool:
        return token in self.inverters or self.correct(token) in self.inverters

    def with_strengths(self, changes: Mapping[str, int]) -> StrengthLexicon:
        """
        Copy of this lexicon with some term strengths replaced or added.

        :param changes: term to new strength
        :type changes: Mapping[str, int]

        :return: adjusted lexicon
        :rtype: StrengthLexicon
        """
        term_strengths = dict(self.term_strengths)
        term_strengths.update(changes)
        return StrengthLexicon(
            term_strengths=term_strengths,
            boosters=self.boosters,
            inverters=self.inverters,
            emoticons=self.emoticons,
            allowed_doubles=self.allowed_doubles,
        )

    def to_dict(self) -> dict:
        return {
            "term_strengths": dict(self.term_strengths),
            "boosters": dict(self.boosters),
            "inverters": sorted(self.inverters),
            "emoticons": dict(self.emoticons),
            "allowed_doubles": "".join(sorted(self.allowed_doubles)),
        }

    def to_tsv(self) -> str:
        """
        The term strengths in the ``term TAB strength`` file format, sorted
        by term.
        """
        return "".join(
            f"{term}\t{self.term_strengths[term]}\n"
            for term in sorted(self.term_strengths)
        )

    def save(self, path: str):
        """
        Write the term strengths to ``path``.

        :param path: output file
        :type path: str
        """
        Utils.save_to_file(path, self.to_tsv())


def _read(path: str) -> str:
    contents = Utils.read_file_contents(path)
    if contents is None:
        raise LexiconException(f"Unable to read lexicon file {path}")
    return contents


def _parse_signed(contents: str, source: str, check, what: str) -> Dict[str, int]:
    values = {}
    for line_number, fields in Utils.iter_table_lines(contents):
        if len(fields) != 2 or not fields[0]:
            logging.warning(f"{source}:{line_number}: expected '{what} TAB value'")
            continue
        term = fields[0].lower() if what != "emoticon" else fields[0]
        try:
            value = int(fields[1])
        except ValueError:
            logging.warning(f"{source}:{line_number}: bad value {fields[1]!r}")
            continue
        if not check(value):
            logging.warning(f"{source}:{line_number}: rejected {term}, value {value}")
            continue
        if term in values:
            logging.warning(f"{source}:{line_number}: duplicate {term}, last wins")
        values[term] = value
    return values


def parse_strength_list(
    contents: str, source: str = "<strength list>"
) -> Dict[str, int]:
    """
    Parse ``term TAB signed-strength`` lines.

    Strengths outside -5..-2 and 2..5 are rejected with a warning; for a
    duplicate term the last line wins, also with a warning.
    """
    return _parse_signed(contents, source, _check_strength, "term")


def parse_boosters(contents: str, source: str = "<boosters>") -> Dict[str, int]:
    return _parse_signed(
        contents,
        source,
        lambda v: v != 0 and abs(v) <= Constants.MAX_STRENGTH,
        "term",
    )


def parse_emoticons(contents: str, source: str = "<emoticons>") -> Dict[str, int]:
    return _parse_signed(
        contents, source, lambda v: _check_strength(v, low=1), "emoticon"
    )


def parse_inverters(contents: str) -> Set[str]:
    return {
        fields[0].lower()
        for _, fields in Utils.iter_table_lines(contents)
        if fields[0]
    }


def load_boosters(path: str = None) -> Dict[str, int]:
    """
    Load ``term TAB delta`` booster words; the bundled list when no path is
    given.
    """
    if path is None:
        return parse_boosters(Utils.read_resource(Constants.BOOSTER_RESOURCE))
    return parse_boosters(_read(path), path)


def load_inverters(path: str = None) -> Set[str]:
    """
    Load negation words, one per line; the bundled list when no path is
    given.
    """
    if path is None:
        return parse_inverters(Utils.read_resource(Constants.INVERTER_RESOURCE))
    return parse_inverters(_read(path))


def load_emoticons(path: str = None) -> Dict[str, int]:
    if path is None:
        return parse_emoticons(Utils.read_resource(Constants.EMOTICON_RESOURCE))
    return parse_emoticons(_read(path), path)


def build_lexicon(
    term_strengths: Mapping[str, int],
    boosters: Mapping[str, int],
    inverters: Iterable[str],
    emoticons: Mapping[str, int] = None,
    allowed_doubles: Iterable[str] = None,
) -> StrengthLexicon:
    """
    Build a lexicon from loaded parts, resolving overlaps with a warning:
    negation words win over boosters and both win over term strengths.
    """
    inverters = set(inverters)
    boosters = dict(boosters)
    term_strengths = dict(term_strengths)

    for term in sorted(set(boosters) & inverters):
        logging.warning(f"'{term}' is both booster and inverter; kept as inverter")
        del boosters[term]
    for term in sorted(set(term_strengths) & (set(boosters) | inverters)):
        logging.warning(f"'{term}' is a booster or inverter; dropped from strengths")
        del term_strengths[term]

    return StrengthLexicon(
        term_strengths=term_strengths,
        boosters=boosters,
        inverters=inverters,
        emoticons=emoticons,
        allowed_doubles=allowed_doubles,
    )


def load_strength_lexicon(
    path: str,
    booster_path: str = None,
    inverter_path: str = None,
    emoticon_path: str = None,
    allowed_doubles: Iterable[str] = None,
) -> StrengthLexicon:
    """
    Load a strength lexicon.

    The term strengths come from ``path``; booster, negation and emoticon
    lists default to the bundled ones.

    :param path: ``term TAB signed-strength`` file
    :type path: str
    :param booster_path: ``term TAB delta`` file
    :type booster_path: str
    :param inverter_path: one negation word per line
    :type inverter_path: str
    :param emoticon_path: ``emoticon TAB strength`` file
    :type emoticon_path: str
    :param allowed_doubles: letters that commonly double
    :type allowed_doubles: Iterable[str]

    :return: validated lexicon
    :rtype: StrengthLexicon

    :raises LexiconException: if a file cannot be read
    """
    return build_lexicon(
        term_strengths=parse_strength_list(_read(path), path),
        boosters=load_boosters(booster_path),
        inverters=load_inverters(inverter_path),
        emoticons=load_emoticons(emoticon_path),
        allowed_doubles=allowed_doubles,
    )


def load_default_lexicon() -> StrengthLexicon:
    """
    The bundled seed lexicon.

    :rtype: StrengthLexicon
    """
    return build_lexicon(
        term_strengths=parse_strength_list(
            Utils.read_resource(Constants.STRENGTH_LIST_RESOURCE),
            Constants.STRENGTH_LIST_RESOURCE,
        ),
        boosters=load_boosters(),
        inverters=load_inverters(),
        emoticons=load_emoticons(),
    )


def tokenize(
    text: str, emoticons: Mapping[str, int] = None
) -> List[Tuple[List[str], str]]:
    """
    Split a text into sentences of tokens.

    Whitespace separated chunks found in ``emoticons`` are kept whole.
    Otherwise words and runs of ``.``, ``!`` and ``?`` are extracted; a
    punctuation run closes the current sentence.

    :return: ``(tokens, terminator)`` pairs; the terminator of a trailing
        unterminated sentence is ``""``
    :rtype: List[Tuple[List[str], str]]
    """
    emoticons = emoticons or {}
    sentences = []
    tokens = []
    for chunk in text.split():
        if chunk in emoticons:
            tokens.append(chunk)
            continue
        for token in TOKEN_PATTERN.findall(chunk.lower()):
            if token[0] in TERMINATORS:
                sentences.append((tokens, token))
                tokens = []
            else:
                tokens.append(token)
    if tokens:
        sentences.append((tokens, ""))
    return sentences


def _clamp(magnitude: int) -> int:
    return min(max(magnitude, Constants.MIN_STRENGTH), Constants.MAX_STRENGTH)


def score_sentence(
    lex: StrengthLexicon, tokens: List[str], terminator: str
) -> Tuple[int, int]:
    """
    Score one sentence.

    :return: ``(positive, negative)``
    :rtype: Tuple[int, int]
    """
    strengths = []
    for i, token in enumerate(tokens):
        base = lex.strength(token)
        if base is None:
            continue

        window = tokens[max(0, i - 2) : i]
        if any(lex.is_inverter(t) for t in window):
            # Negation flips the unboosted strength.
            strengths.append(-base)
            continue

        value = base
        for previous in reversed(window):
            delta = lex.booster(previous)
            if delta is not None:
                magnitude = _clamp(abs(base) + delta)
                value = magnitude if base > 0 else -magnitude
                break
        strengths.append(value)

    if strengths and len(terminator) >= 2 and "!" in terminator:
        last = strengths[-1]
        magnitude = min(abs(last) + 1, Constants.MAX_STRENGTH)
        strengths[-1] = magnitude if last > 0 else -magnitude

    positive = max((s for s in strengths if s > 0), default=1)
    negative = min((s for s in strengths if s < 0), default=-1)
    if "!" in terminator:
        positive = max(positive, 2)
    return positive, negative


def score_sentences(
    lex: StrengthLexicon, sentences: List[Tuple[List[str], str]]
) -> SentimentScore:
    positive, negative = 1, -1
    for tokens, terminator in sentences:
        p, n = score_sentence(lex, tokens, terminator)
        positive = max(positive, p)
        negative = min(negative, n)
    return SentimentScore(positive, negative)


def score_text(lex: StrengthLexicon, text: str) -> SentimentScore:
    """
    Score a cleaned text.

    Per sentence, each sentiment term contributes its strength.  A negation
    word among the two preceding tokens flips the sign of the base
    strength and boosters are then ignored; otherwise the nearest booster
    among the two preceding tokens shifts the magnitude within 2..5.  A run
    of two or more punctuation marks containing '!' adds 1 to the magnitude
    of the last sentiment term of the sentence, and any sentence ending in
    '!' has a positive strength of at least 2.  The text takes the maximum
    positive and minimum negative over its sentences.

    :param lex: lexicon
    :type lex: StrengthLexicon
    :param text: cleaned text
    :type text: str

    :return: dual score, ``(1, -1)`` when nothing matches
    :rtype: SentimentScore
    """
    return score_sentences(lex, tokenize(text or "", lex.emoticons))


def score_texts(
    lex: StrengthLexicon, texts: Iterable[str], executor: Executor = None
) -> List[SentimentScore]:
    """
    Score many texts, keeping input order.

    :param executor: optional executor to spread the work over
    :type executor: Executor
    """
    if executor is None:
        return [score_text(lex, text) for text in texts]
    return list(executor.map(lambda text: score_text(lex, text), texts))
