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
Domain lexicon generation.

Tokens of a labelled corpus are counted per class, turned into rate
(PR/NR) and frequency (PF/NF) metrics, mapped through the empirical CDF of
each metric, and scored by the harmonic mean of the rate and frequency
CDFs (HMP for positive, HMN for negative).
"""
from __future__ import annotations

import logging
import math
import re
from typing import Iterable, List, Sequence, Tuple, Union

import numpy as np
import pandas as pd
from scipy.stats import rankdata
from sklearn.feature_extraction.text import CountVectorizer

from altmetrics_sentiment.sentilib.constants import Constants
from altmetrics_sentiment.sentilib.strength import (
    StrengthLexicon,
    load_boosters,
    load_emoticons,
    load_inverters,
)

WORD_TOKEN = re.compile(r"[^\W_]+(?:'[^\W_]+)*")

TABLE_COLUMNS = [
    "token",
    "pos_freq",
    "neg_freq",
    "total_freq",
    "PR",
    "NR",
    "PF",
    "NF",
    "PR_cdf",
    "PF_cdf",
    "NR_cdf",
    "NF_cdf",
    "HMP",
    "HMN",
]

VIEW_POSITIVE = "positive"
VIEW_NEGATIVE = "negative"


class LexgenException(Exception):
    """
    Lexicon generation was given unusable input.
    """

    pass


class TermCounts:
    """
    Per-class occurrence counts of one token.
    """

    def __init__(self, token: str, pos_freq: int, neg_freq: int, neu_freq: int):
        self.token = token
        self.pos_freq = pos_freq
        self.neg_freq = neg_freq
        self.neu_freq = neu_freq

    @property
    def total_freq(self) -> int:
        return self.pos_freq + self.neg_freq + self.neu_freq

    def to_dict(self) -> dict:
        return {
            "token": self.token,
            "pos_freq": self.pos_freq,
            "neg_freq": self.neg_freq,
            "neu_freq": self.neu_freq,
            "total_freq": self.total_freq,
        }

    def __repr__(self):
        return (
            f"TermCounts({self.token!r}, pos={self.pos_freq}, "
            f"neg={self.neg_freq}, neu={self.neu_freq})"
        )


class LexiconEntry:
    """
    Counts and scores of one token.
    """

    n_metrics = 2

    def __init__(
        self,
        counts: TermCounts,
        PR: float,
        NR: float,
        PF: float,
        NF: float,
        PR_cdf: float,
        PF_cdf: float,
        NR_cdf: float,
        NF_cdf: float,
        HMP: float,
        HMN: float,
    ):
        self.counts = counts
        self.PR = PR
        self.NR = NR
        self.PF = PF
        self.NF = NF
        self.PR_cdf = PR_cdf
        self.PF_cdf = PF_cdf
        self.NR_cdf = NR_cdf
        self.NF_cdf = NF_cdf
        self.HMP = HMP
        self.HMN = HMN

    @property
    def token(self) -> str:
        return self.counts.token

    def to_dict(self) -> dict:
        return {
            "token": self.token,
            "pos_freq": self.counts.pos_freq,
            "neg_freq": self.counts.neg_freq,
            "total_freq": self.counts.total_freq,
            "PR": self.PR,
            "NR": self.NR,
            "PF": self.PF,
            "NF": self.NF,
            "PR_cdf": self.PR_cdf,
            "PF_cdf": self.PF_cdf,
            "NR_cdf": self.NR_cdf,
            "NF_cdf": self.NF_cdf,
            "HMP": self.HMP,
            "HMN": self.HMN,
        }


class LexiconTable:
    """
    Scored tokens, sorted by descending HMP.  :py:meth:`view` gives the
    negative ordering.
    """

    def __init__(
        self,
        entries: Iterable[LexiconEntry],
        sum_pos: int = 0,
        sum_neg: int = 0,
        sum_neu: int = 0,
    ):
        self.sum_pos = sum_pos
        self.sum_neg = sum_neg
        self.sum_neu = sum_neu
        self.entries = self.__sorted(entries, VIEW_POSITIVE)

    @staticmethod
    def __sorted(entries: Iterable[LexiconEntry], view: str) -> List[LexiconEntry]:
        if view == VIEW_POSITIVE:
            return sorted(
                entries, key=lambda e: (-e.HMP, -e.counts.total_freq, e.token)
            )
        if view == VIEW_NEGATIVE:
            return sorted(
                entries, key=lambda e: (-e.HMN, -e.counts.total_freq, e.token)
            )
        raise LexgenException(f"Unknown view {view!r}")

    @property
    def corpus_sizes(self) -> dict:
        return {
            "sum_pos": self.sum_pos,
            "sum_neg": self.sum_neg,
            "sum_neu": self.sum_neu,
        }

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def get(self, token: str) -> Union[LexiconEntry, None]:
        for entry in self.entries:
            if entry.token == token:
                return entry
        return None

    def view(self, view: str = VIEW_POSITIVE) -> List[LexiconEntry]:
        """
        Entries ordered by HMP (``positive``) or HMN (``negative``), ties
        broken by descending total frequency then token.
        """
        return self.__sorted(self.entries, view)

    def top(self, k: int, view: str = VIEW_POSITIVE) -> pd.DataFrame:
        """
        Listing of the ``k`` best tokens of a view with their total
        frequency and both scores.

        :rtype: pd.DataFrame
        """
        rows = [
            {
                "rank": rank,
                "token": e.token,
                "total_freq": e.counts.total_freq,
                "HMP": e.HMP,
                "HMN": e.HMN,
            }
            for rank, e in enumerate(self.view(view)[:k], start=1)
        ]
        return pd.DataFrame(rows, columns=["rank", "token", "total_freq", "HMP", "HMN"])

    def scatter(self) -> pd.DataFrame:
        """
        (token, HMP, HMN) points sorted by token.

        :rtype: pd.DataFrame
        """
        rows = sorted(
            ({"token": e.token, "HMP": e.HMP, "HMN": e.HMN} for e in self.entries),
            key=lambda r: r["token"],
        )
        return pd.DataFrame(rows, columns=["token", "HMP", "HMN"])

    def to_dataframe(self, view: str = VIEW_POSITIVE) -> pd.DataFrame:
        """
        The full table with the published column layout.

        :rtype: pd.DataFrame
        """
        return pd.DataFrame(
            [e.to_dict() for e in self.view(view)], columns=TABLE_COLUMNS
        )


def _text(item) -> str:
    return getattr(item, "text", item) or ""


def count_terms(corpus: Sequence[Tuple[object, str]]) -> List[TermCounts]:
    """
    Count whitespace tokens per class.

    Token occurrences are counted, so a token used twice in one tweet counts
    twice.

    :param corpus: ``(tweet or text, label)`` pairs
    :type corpus: Sequence[Tuple[object, str]]

    :return: counts sorted by token
    :rtype: List[TermCounts]

    :raises LexgenException: for an empty corpus or an unknown label
    """
    if not corpus:
        raise LexgenException("Cannot count terms of an empty corpus")

    texts = []
    labels = []
    for item, label in corpus:
        if label not in (Constants.POSITIVE, Constants.NEGATIVE, Constants.NEUTRAL):
            raise LexgenException(f"Unknown label {label!r}")
        texts.append(_text(item))
        labels.append(label)

    vectorizer = CountVectorizer(
        tokenizer=str.split, token_pattern=None, lowercase=False
    )
    try:
        matrix = vectorizer.fit_transform(texts)
    except ValueError:
        # Only empty documents.
        return []

    tokens = vectorizer.get_feature_names_out()
    labels = np.asarray(labels)

    def class_sums(label):
        mask = labels == label
        if not mask.any():
            return np.zeros(len(tokens), dtype=np.int64)
        return np.asarray(matrix[mask].sum(axis=0)).ravel()

    pos = class_sums(Constants.POSITIVE)
    neg = class_sums(Constants.NEGATIVE)
    neu = class_sums(Constants.NEUTRAL)

    return [
        TermCounts(str(token), int(p), int(n), int(u))
        for token, p, n, u in zip(tokens, pos, neg, neu)
    ]


def compute_rates(c: TermCounts) -> Tuple[float, float]:
    """
    Positive and negative rate: class count over total count.

    :rtype: Tuple[float, float]
    """
    if c.total_freq == 0:
        raise LexgenException(f"Token {c.token!r} has no occurrences")
    return c.pos_freq / c.total_freq, c.neg_freq / c.total_freq


def compute_frequencies(
    c: TermCounts, sum_pos: int, sum_neg: int
) -> Tuple[float, float]:
    """
    Positive and negative frequency: class count over the total number of
    tokens in the class; 0 for an empty class.

    :rtype: Tuple[float, float]
    """
    pf = c.pos_freq / sum_pos if sum_pos > 0 else 0.0
    nf = c.neg_freq / sum_neg if sum_neg > 0 else 0.0
    return pf, nf


class EmpiricalCdf:
    """
    F(x) = (number of values <= x) / (number of values).
    """

    def __init__(self, values: Iterable[float]):
        values = np.asarray(list(values), dtype=float)
        if values.size == 0:
            raise LexgenException("Empirical CDF needs at least one value")
        self.values = np.sort(values)
        self.n = values.size

    def __call__(self, x):
        counts = np.searchsorted(self.values, x, side="right")
        if np.ndim(counts) == 0:
            return int(counts) / self.n
        return counts / self.n

    def of_samples(self, values: np.ndarray) -> np.ndarray:
        """
        CDF of each of the values the function was built from, in their
        original order.
        """
        return rankdata(values, method="max") / self.n


def empirical_cdf(values: Iterable[float]) -> EmpiricalCdf:
    """
    Build the empirical CDF of ``values``.

    :rtype: EmpiricalCdf
    """
    return EmpiricalCdf(values)


def harmonic_mean(a, b):
    """
    2ab/(a+b), 0 when both are 0, kept within [min(a, b), max(a, b)].
    """
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    total = a + b
    with np.errstate(divide="ignore", invalid="ignore"):
        hm = np.where(total > 0, 2.0 * a * b / np.where(total > 0, total, 1.0), 0.0)
    hm = np.clip(hm, np.minimum(a, b), np.maximum(a, b))
    if hm.ndim == 0:
        return float(hm)
    return hm


def harmonic_scores(e) -> Tuple[float, float]:
    """
    HMP from PR_cdf and PF_cdf, HMN from NR_cdf and NF_cdf.

    :param e: anything with ``PR_cdf``, ``PF_cdf``, ``NR_cdf`` and ``NF_cdf``
    :return: ``(HMP, HMN)``
    :rtype: Tuple[float, float]
    """
    return harmonic_mean(e.PR_cdf, e.PF_cdf), harmonic_mean(e.NR_cdf, e.NF_cdf)


def generate_lexicon(
    corpus: Sequence[Tuple[object, str]],
    min_total_freq: int = Constants.DEFAULT_MIN_TOTAL_FREQ,
) -> LexiconTable:
    """
    Count, rate and score every token of a labelled corpus.

    Class totals for PF and NF include every token; tokens occurring fewer
    than ``min_total_freq`` times are then left out before the CDFs are
    built.

    :param corpus: ``(tweet or text, label)`` pairs
    :type corpus: Sequence[Tuple[object, str]]
    :param min_total_freq: smallest kept total frequency
    :type min_total_freq: int

    :return: scored table
    :rtype: LexiconTable
    """
    counts = count_terms(corpus)

    sum_pos = sum(c.pos_freq for c in counts)
    sum_neg = sum(c.neg_freq for c in counts)
    sum_neu = sum(c.neu_freq for c in counts)
    if sum_pos == 0:
        logging.warning("No positive tokens in the corpus; PF is 0 for every token")
    if sum_neg == 0:
        logging.warning("No negative tokens in the corpus; NF is 0 for every token")

    counts = [c for c in counts if c.total_freq >= min_total_freq]
    if not counts:
        logging.warning("No tokens left for the lexicon table")
        return LexiconTable([], sum_pos, sum_neg, sum_neu)

    pos = np.array([c.pos_freq for c in counts], dtype=float)
    neg = np.array([c.neg_freq for c in counts], dtype=float)
    total = np.array([c.total_freq for c in counts], dtype=float)

    pr = pos / total
    nr = neg / total
    pf = pos / sum_pos if sum_pos > 0 else np.zeros_like(pos)
    nf = neg / sum_neg if sum_neg > 0 else np.zeros_like(neg)

    cdfs = {}
    for name, values in (("PR", pr), ("PF", pf), ("NR", nr), ("NF", nf)):
        cdfs[name] = empirical_cdf(values).of_samples(values)

    hmp = harmonic_mean(cdfs["PR"], cdfs["PF"])
    hmn = harmonic_mean(cdfs["NR"], cdfs["NF"])

    entries = [
        LexiconEntry(
            counts=c,
            PR=float(pr[i]),
            NR=float(nr[i]),
            PF=float(pf[i]),
            NF=float(nf[i]),
            PR_cdf=float(cdfs["PR"][i]),
            PF_cdf=float(cdfs["PF"][i]),
            NR_cdf=float(cdfs["NR"][i]),
            NF_cdf=float(cdfs["NF"][i]),
            HMP=float(hmp[i]),
            HMN=float(hmn[i]),
        )
        for i, c in enumerate(counts)
    ]
    logging.info(f"Generated lexicon table with {len(entries)} tokens")
    return LexiconTable(entries, sum_pos, sum_neg, sum_neu)


def _band_strengths(scores: List[float], band: Tuple[int, int]) -> List[int]:
    low, high = band
    n = len(scores)
    ranks = rankdata(scores, method="min")
    strengths = []
    for rank in ranks:
        q = 1.0 if n == 1 else (rank - 1) / (n - 1)
        strengths.append(min(low + int(math.floor(q * (high - low + 1))), high))
    return strengths


def export_strength_list(
    table: LexiconTable,
    top_k: int = Constants.DEFAULT_TOP_K,
    band: Tuple[int, int] = (Constants.MIN_STRENGTH, Constants.MAX_STRENGTH),
    base: StrengthLexicon = None,
) -> StrengthLexicon:
    """
    Turn the best scored tokens into a strength lexicon.

    The ``top_k`` tokens by HMP become positive terms and the ``top_k`` by
    HMN negative terms.  A token on both lists goes to the list with the
    larger score; a token whose HMP equals its HMN is left out with a
    warning.  Within each list the score quantile is binned linearly into
    ``band``.  Only word tokens the scorer can match are exported, and
    booster or negation words of ``base`` (the bundled lists when no base
    is given) are skipped.

    :param table: scored table
    :type table: LexiconTable
    :param top_k: tokens exported per polarity
    :type top_k: int
    :param band: ``(min, max)`` strength magnitude
    :type band: Tuple[int, int]
    :param base: lexicon providing booster, negation and emoticon lists
    :type base: StrengthLexicon

    :return: lexicon holding the exported terms
    :rtype: StrengthLexicon

    :raises LexgenException: for an empty table or invalid arguments
    """
    if len(table) == 0:
        raise LexgenException("Cannot export an empty lexicon table")
    if top_k < 1:
        raise LexgenException(f"top_k must be >= 1, got {top_k}")
    low, high = band
    if not Constants.MIN_STRENGTH <= low <= high <= Constants.MAX_STRENGTH:
        raise LexgenException(f"Strength band {band} outside 2..5")

    if base is None:
        boosters, inverters = load_boosters(), load_inverters()
        emoticons = load_emoticons()
        allowed_doubles = None
    else:
        boosters, inverters = dict(base.boosters), set(base.inverters)
        emoticons, allowed_doubles = dict(base.emoticons), base.allowed_doubles

    eligible = []
    reserved = []
    for entry in table.entries:
        if not WORD_TOKEN.fullmatch(entry.token):
            logging.debug(f"Not exporting non-word token {entry.token!r}")
            continue
        if entry.token in boosters or entry.token in inverters:
            reserved.append(entry.token)
            continue
        eligible.append(entry)
    if reserved:
        logging.warning(f"Not exporting booster or negation words: {sorted(reserved)}")

    positive = LexiconTable(eligible).view(VIEW_POSITIVE)[:top_k]
    negative = LexiconTable(eligible).view(VIEW_NEGATIVE)[:top_k]

    pos_final, neg_final = [], []
    negative_tokens = {e.token for e in negative}
    positive_tokens = {e.token for e in positive}
    for entry in positive:
        if entry.HMP == entry.HMN:
            logging.warning(f"Excluding {entry.token!r}: HMP equals HMN")
        elif entry.token not in negative_tokens or entry.HMP > entry.HMN:
            pos_final.append(entry)
    for entry in negative:
        if entry.HMP == entry.HMN:
            if entry.token not in positive_tokens:
                logging.warning(f"Excluding {entry.token!r}: HMP equals HMN")
        elif entry.token not in positive_tokens or entry.HMN > entry.HMP:
            neg_final.append(entry)

    strengths = {}
    if pos_final:
        for entry, s in zip(
            pos_final, _band_strengths([e.HMP for e in pos_final], band)
        ):
            strengths[entry.token] = s
    if neg_final:
        for entry, s in zip(
            neg_final, _band_strengths([e.HMN for e in neg_final], band)
        ):
            strengths[entry.token] = -s

    logging.info(
        f"Exported {len(pos_final)} positive and {len(neg_final)} negative terms"
    )
    return StrengthLexicon(
        term_strengths=strengths,
        boosters=boosters,
        inverters=inverters,
        emoticons=emoticons,
        allowed_doubles=allowed_doubles,
    )
