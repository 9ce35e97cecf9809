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
Article and domain level sentiment summaries.

A tweet score (positive, negative) is mapped to t = (positive + negative + 4) / 8
in [0, 1].  An article scores the mean t of its tweets and is labelled
positive above ``pos_threshold`` and negative below ``neg_threshold``.
"""
from __future__ import annotations

import json
import logging
import math
import warnings
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

import numpy as np
import pandas as pd
from scipy.stats import norm, pearsonr, spearmanr

from altmetrics_sentiment.sentilib.constants import Constants
from altmetrics_sentiment.sentilib.corpus import ArticleDoc
from altmetrics_sentiment.sentilib.strength import (
    SentimentScore,
    StrengthLexicon,
    score_text,
)

LABELS = [Constants.POSITIVE, Constants.NEGATIVE, Constants.NEUTRAL]


class SummarizeException(Exception):
    """
    Summaries were requested for unusable input.
    """

    pass


def tweet_score(score: SentimentScore) -> float:
    """
    Map a dual score onto [0, 1]: (positive + negative + 4) / 8.

    :rtype: float
    """
    positive, negative = score
    return (positive + negative + 4) / 8


def label_article(
    score: float,
    pos_threshold: float = Constants.DEFAULT_POS_THRESHOLD,
    neg_threshold: float = Constants.DEFAULT_NEG_THRESHOLD,
) -> str:
    """
    Label an article score; both thresholds are exclusive.

    :rtype: str
    """
    if score > pos_threshold:
        return Constants.POSITIVE
    if score < neg_threshold:
        return Constants.NEGATIVE
    return Constants.NEUTRAL


class ArticleSentiment:
    """
    Sentiment of one article.
    """

    def __init__(
        self,
        altmetric_id: str,
        score: float,
        label: str,
        tweet_count: int,
        avg_pos: float = 0.0,
        avg_neg: float = 0.0,
        domain_codes: Iterable[str] = (),
        citation_count: int = 0,
    ):
        self.altmetric_id = altmetric_id
        self.score = score
        self.label = label
        self.tweet_count = tweet_count
        self.avg_pos = avg_pos
        self.avg_neg = avg_neg
        self.domain_codes = frozenset(domain_codes)
        self.citation_count = citation_count

    def to_dict(self) -> dict:
        return {
            "altmetric_id": self.altmetric_id,
            "tweet_count": self.tweet_count,
            "score": self.score,
            "label": self.label,
            "avg_pos": self.avg_pos,
            "avg_neg": self.avg_neg,
            "citation_count": self.citation_count,
            "domain_codes": ";".join(sorted(self.domain_codes)),
        }

    def __str__(self):
        return json.dumps(self.to_dict())


class DomainSummary:
    """
    Aggregated sentiment of the articles of one discipline.
    """

    def __init__(
        self,
        domain_code: str,
        doc_count: int,
        avg_pos: float,
        avg_neg: float,
        mu: float,
        sigma: float,
        label_counts: Mapping[str, int] = None,
    ):
        self.domain_code = domain_code
        self.doc_count = doc_count
        self.avg_pos = avg_pos
        self.avg_neg = avg_neg
        self.mu = mu
        self.sigma = sigma
        self.label_counts = dict(label_counts or {})

    @property
    def normal_fit(self) -> Tuple[float, float]:
        return self.mu, self.sigma

    def to_dict(self) -> dict:
        return {
            "domain": self.domain_code,
            "doc_count": self.doc_count,
            "avg_pos": self.avg_pos,
            "avg_neg": self.avg_neg,
            "mu": self.mu,
            "sigma": self.sigma,
            "n_positive": self.label_counts.get(Constants.POSITIVE, 0),
            "n_negative": self.label_counts.get(Constants.NEGATIVE, 0),
            "n_neutral": self.label_counts.get(Constants.NEUTRAL, 0),
        }

    def __str__(self):
        return json.dumps(self.to_dict())


class CorrelationRow:
    """
    Correlation between article score and citation count above one score
    threshold; ``coefficient`` is ``None`` when undefined.
    """

    def __init__(self, threshold: float, n: int, coefficient: Optional[float]):
        self.threshold = threshold
        self.n = n
        self.coefficient = coefficient

    @property
    def defined(self) -> bool:
        return self.coefficient is not None

    def to_dict(self) -> dict:
        return {
            "threshold": self.threshold,
            "n": self.n,
            "coefficient": (
                self.coefficient if self.defined else Constants.UNDEFINED
            ),
        }


def _mean(values: Sequence[float]) -> float:
    return math.fsum(values) / len(values)


def article_score(
    doc: ArticleDoc,
    lex: StrengthLexicon,
    min_tweets: int = Constants.DEFAULT_MIN_TWEETS,
    pos_threshold: float = Constants.DEFAULT_POS_THRESHOLD,
    neg_threshold: float = Constants.DEFAULT_NEG_THRESHOLD,
    scores: Sequence[SentimentScore] = None,
) -> ArticleSentiment:
    """
    Score an article as the mean mapped score of its tweets.

    :param doc: article document
    :type doc: ArticleDoc
    :param lex: lexicon used when ``scores`` is not given
    :type lex: StrengthLexicon
    :param min_tweets: tweet cutoff
    :type min_tweets: int
    :param pos_threshold: exclusive positive threshold
    :type pos_threshold: float
    :param neg_threshold: exclusive negative threshold
    :type neg_threshold: float
    :param scores: already computed tweet scores, in tweet order
    :type scores: Sequence[SentimentScore]

    :return: article sentiment
    :rtype: ArticleSentiment

    :raises SummarizeException: if the article has fewer than ``min_tweets``
        tweets
    """
    if doc.tweet_count < min_tweets or doc.tweet_count == 0:
        raise SummarizeException(
            f"Article {doc.altmetric_id} has {doc.tweet_count} tweets, "
            f"fewer than {min_tweets}"
        )
    if scores is None:
        scores = [score_text(lex, tweet.text) for tweet in doc.tweets]
    elif len(scores) != doc.tweet_count:
        raise SummarizeException(
            f"Article {doc.altmetric_id}: {len(scores)} scores for "
            f"{doc.tweet_count} tweets"
        )

    score = _mean([tweet_score(s) for s in scores])
    return ArticleSentiment(
        altmetric_id=doc.altmetric_id,
        score=score,
        label=label_article(score, pos_threshold, neg_threshold),
        tweet_count=doc.tweet_count,
        avg_pos=_mean([s.positive / Constants.MAX_STRENGTH for s in scores]),
        avg_neg=_mean([-s.negative / Constants.MAX_STRENGTH for s in scores]),
        domain_codes=doc.domain_codes,
        citation_count=doc.citation_count,
    )


def _by_domain(
    sents: Iterable[ArticleSentiment],
) -> Dict[str, List[ArticleSentiment]]:
    groups = {}
    for sent in sorted(sents, key=lambda s: s.altmetric_id):
        for domain in sorted(sent.domain_codes):
            groups.setdefault(domain, []).append(sent)
    return dict(sorted(groups.items()))


def domain_summary(sents: Iterable[ArticleSentiment]) -> List[DomainSummary]:
    """
    Summarise articles per discipline.

    An article in several disciplines counts in each.  Disciplines without
    articles are omitted.  ``mu`` and ``sigma`` are the sample mean and
    sample standard deviation of the article scores (``sigma`` is 0 for a
    single article).

    :rtype: List[DomainSummary]
    """
    summaries = []
    for domain, group in _by_domain(sents).items():
        scores = np.array([s.score for s in group], dtype=float)
        sigma = float(np.std(scores, ddof=1)) if len(group) > 1 else 0.0
        label_counts = {label: 0 for label in LABELS}
        for s in group:
            label_counts[s.label] += 1
        summaries.append(
            DomainSummary(
                domain_code=domain,
                doc_count=len(group),
                avg_pos=_mean([s.avg_pos for s in group]),
                avg_neg=_mean([s.avg_neg for s in group]),
                mu=_mean(list(scores)),
                sigma=sigma,
                label_counts=label_counts,
            )
        )
    return summaries


def _percentages(counts: Sequence[int]) -> List[float]:
    """
    Percentages with two decimals that sum to exactly 100, by the largest
    remainder method.
    """
    n = sum(counts)
    scale = 10000
    floors = [c * scale // n for c in counts]
    remainders = [c * scale % n for c in counts]
    missing = scale - sum(floors)
    order = sorted(range(len(counts)), key=lambda i: (-remainders[i], i))
    for i in order[:missing]:
        floors[i] += 1
    return [f / 100 for f in floors]


def sentiment_distribution(labels: Sequence[str]) -> Tuple[float, float, float]:
    """
    Shares of positive, negative and neutral labels in percent.

    :return: ``(pct_pos, pct_neg, pct_neu)``
    :rtype: Tuple[float, float, float]

    :raises SummarizeException: for an empty list
    """
    if not labels:
        raise SummarizeException("Cannot compute the distribution of no labels")
    counts = [0, 0, 0]
    for label in labels:
        counts[LABELS.index(label)] += 1
    pct_pos, pct_neg, pct_neu = _percentages(counts)
    return pct_pos, pct_neg, pct_neu


DISTRIBUTION_COLUMNS = ["year", "n", "pct_pos", "pct_neg", "pct_neu"]


def distribution_by_year(tweets: Iterable[Tuple[object, str]]) -> pd.DataFrame:
    """
    Label shares per calendar year plus an ``all`` row.

    :param tweets: ``(posted_at or None, label)`` pairs
    :type tweets: Iterable[Tuple[datetime, str]]

    :rtype: pd.DataFrame
    """
    years = {}
    every = []
    for posted_at, label in tweets:
        every.append(label)
        if posted_at is not None:
            years.setdefault(str(posted_at.year), []).append(label)

    rows = []
    for year in sorted(years) + ["all"]:
        labels = every if year == "all" else years[year]
        if not labels:
            continue
        pct_pos, pct_neg, pct_neu = sentiment_distribution(labels)
        rows.append([year, len(labels), pct_pos, pct_neg, pct_neu])
    return pd.DataFrame(rows, columns=DISTRIBUTION_COLUMNS)


def article_label_distribution(sents: Sequence[ArticleSentiment]) -> pd.DataFrame:
    """
    Article level label counts and shares.

    :rtype: pd.DataFrame
    """
    columns = ["n_articles", "n_positive", "n_negative", "n_neutral"]
    columns += ["pct_pos", "pct_neg", "pct_neu"]
    if not sents:
        return pd.DataFrame([], columns=columns)
    labels = [s.label for s in sents]
    counts = [labels.count(label) for label in LABELS]
    return pd.DataFrame(
        [[len(labels)] + counts + list(sentiment_distribution(labels))],
        columns=columns,
    )


def normal_fit(summaries: Sequence[DomainSummary]) -> pd.DataFrame:
    """
    (domain, n, mu, sigma) rows of the fitted normal distributions.

    :rtype: pd.DataFrame
    """
    return pd.DataFrame(
        [[s.domain_code, s.doc_count, s.mu, s.sigma] for s in summaries],
        columns=["domain", "n", "mu", "sigma"],
    )


def score_histogram(
    sents: Sequence[ArticleSentiment], bins: int = Constants.DEFAULT_HISTOGRAM_BINS
) -> pd.DataFrame:
    """
    Histogram of article scores over [0, 1] per discipline and for ``all``
    articles, with the fitted normal density scaled to counts.

    :rtype: pd.DataFrame
    """
    columns = ["domain", "bin_start", "bin_end", "count", "fitted"]
    groups = dict(_by_domain(sents))
    everything = sorted(sents, key=lambda s: s.altmetric_id)
    if everything:
        groups["all"] = everything

    edges = np.linspace(0.0, 1.0, bins + 1)
    width = 1.0 / bins
    rows = []
    for domain, group in groups.items():
        scores = np.array([s.score for s in group], dtype=float)
        counts, _ = np.histogram(scores, bins=edges)
        mu = _mean(list(scores))
        sigma = float(np.std(scores, ddof=1)) if len(scores) > 1 else 0.0
        if sigma > 0:
            fitted = norm.pdf((edges[:-1] + edges[1:]) / 2, loc=mu, scale=sigma)
            fitted = fitted * len(scores) * width
        else:
            fitted = np.zeros(bins)
            fitted[min(int(mu * bins), bins - 1)] = len(scores)
        for i in range(bins):
            rows.append(
                [
                    domain,
                    float(edges[i]),
                    float(edges[i + 1]),
                    int(counts[i]),
                    float(fitted[i]),
                ]
            )
    return pd.DataFrame(rows, columns=columns)


def domain_scatter(sents: Sequence[ArticleSentiment]) -> pd.DataFrame:
    """
    One point per article and discipline: normalised positive against
    negative strength.

    :rtype: pd.DataFrame
    """
    rows = []
    for domain, group in _by_domain(sents).items():
        for s in group:
            rows.append([domain, s.altmetric_id, s.avg_pos, s.avg_neg, s.score])
    return pd.DataFrame(
        rows, columns=["domain", "altmetric_id", "avg_pos", "avg_neg", "score"]
    )


def check_bins(bins: Sequence[float]):
    """
    :raises SummarizeException: unless the thresholds are strictly
        descending in (0, 1)
    """
    if not bins:
        raise SummarizeException("At least one correlation threshold is required")
    if any(not 0.0 < b < 1.0 for b in bins):
        raise SummarizeException(f"Correlation thresholds must lie in (0, 1): {bins}")
    if any(a <= b for a, b in zip(bins, bins[1:])):
        raise SummarizeException(f"Correlation thresholds must descend: {bins}")


def citation_correlation(
    sents: Sequence[ArticleSentiment],
    citations: Mapping[str, int],
    bins: Sequence[float] = (0.85, 0.8, 0.75),
    method: str = Constants.CORRELATION_SPEARMAN,
) -> List[CorrelationRow]:
    """
    Correlate article score with citation count among the articles scoring
    above each threshold.

    Articles without a citation count are left out.  A bin with fewer than
    three articles, or with constant scores or citations, is undefined.

    :param sents: article sentiments
    :type sents: Sequence[ArticleSentiment]
    :param citations: citation count per altmetric id
    :type citations: Mapping[str, int]
    :param bins: descending thresholds in (0, 1)
    :type bins: Sequence[float]
    :param method: ``spearman`` (rank) or ``pearson`` (linear)
    :type method: str

    :rtype: List[CorrelationRow]
    """
    check_bins(bins)
    if method == Constants.CORRELATION_SPEARMAN:
        correlate = spearmanr
    elif method == Constants.CORRELATION_PEARSON:
        correlate = pearsonr
    else:
        raise SummarizeException(f"Unknown correlation method {method!r}")

    ordered = sorted(sents, key=lambda s: s.altmetric_id)
    rows = []
    for threshold in bins:
        members = [
            s for s in ordered if s.score > threshold and s.altmetric_id in citations
        ]
        n = len(members)
        coefficient = None
        if n >= 3:
            x = [s.score for s in members]
            y = [citations[s.altmetric_id] for s in members]
            if len(set(x)) == 1 or len(set(y)) == 1:
                logging.warning(
                    f"Constant input above {threshold}; correlation undefined"
                )
            else:
                with warnings.catch_warnings():
                    warnings.simplefilter("ignore")
                    value = float(correlate(x, y)[0])
                if not math.isnan(value):
                    coefficient = value
        rows.append(CorrelationRow(threshold, n, coefficient))
    return rows
