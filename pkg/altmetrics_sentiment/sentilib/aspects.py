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
Aspect detection: which part of an article (title, abstract, methodology,
results and conclusion) a tweet talks about.
"""
from __future__ import annotations

import json
import logging
import re
from collections import OrderedDict
from datetime import datetime
from typing import Dict, Iterable, List, Mapping, Sequence

import pandas as pd

from altmetrics_sentiment.sentilib.constants import Constants
from altmetrics_sentiment.sentilib.corpus import ArticleDoc
from altmetrics_sentiment.utils.utils import Utils

WORD_PATTERN = re.compile(r"[^\W_]+")

ASPECT_TABLE_COLUMNS = ["domain", "doc_count"] + Constants.ASPECT_BUCKETS


class AspectException(Exception):
    """
    The aspect keyword table or matching mode is unusable.
    """

    pass


class AspectOpinion:
    """
    One opinion: the article (entity), the aspect, the tweet (holder) and
    its time.
    """

    def __init__(
        self, entity: str, aspect: str, holder: str, time: datetime = None
    ):
        if aspect not in Constants.ASPECT_BUCKETS:
            raise ValueError(f"Unknown aspect {aspect!r}")
        self.entity = entity
        self.aspect = aspect
        self.holder = holder
        self.time = time

    def to_dict(self) -> dict:
        return {
            "entity": self.entity,
            "aspect": self.aspect,
            "holder": self.holder,
            "time": self.time.isoformat() if self.time is not None else "",
        }

    def __str__(self):
        return json.dumps(self.to_dict())


class AspectProfile:
    """
    Per-aspect tweet counts of one article.
    """

    def __init__(
        self,
        altmetric_id: str,
        counts: Mapping[str, int],
        tweet_count: int,
        domain_codes: Iterable[str] = (),
    ):
        self.altmetric_id = altmetric_id
        self.counts = {
            bucket: counts.get(bucket, 0) for bucket in Constants.ASPECT_BUCKETS
        }
        self.tweet_count = tweet_count
        self.domain_codes = frozenset(domain_codes)

    def to_dict(self) -> dict:
        d = {"altmetric_id": self.altmetric_id, "tweet_count": self.tweet_count}
        d.update(self.counts)
        return d

    def __str__(self):
        return json.dumps(self.to_dict())


def parse_aspect_keywords(
    contents: str, source: str = "<aspect keywords>"
) -> "OrderedDict[str, List[str]]":
    keywords = OrderedDict()
    for line_number, fields in Utils.iter_table_lines(contents):
        if len(fields) != 2:
            logging.warning(f"{source}:{line_number}: expected 'aspect TAB keywords'")
            continue
        aspect = fields[0].lower()
        if aspect not in Constants.ASPECTS:
            logging.warning(f"{source}:{line_number}: unknown aspect {fields[0]!r}")
            continue
        words = [w.strip().lower() for w in fields[1].split(",") if w.strip()]
        if aspect in keywords:
            logging.warning(
                f"{source}:{line_number}: duplicate aspect {aspect}, merged"
            )
            words = keywords[aspect] + [w for w in words if w not in keywords[aspect]]
        keywords[aspect] = words
    # Keep the canonical aspect order for tie breaking.
    return OrderedDict((a, keywords[a]) for a in Constants.ASPECTS if a in keywords)


def load_aspect_keywords(path: str = None) -> "OrderedDict[str, List[str]]":
    """
    Load an ``aspect TAB comma-separated keywords`` table; the bundled
    table when no path is given.

    :param path: keyword file
    :type path: str

    :return: aspect to keyword prefixes
    :rtype: OrderedDict[str, List[str]]
    """
    if path is None:
        return parse_aspect_keywords(
            Utils.read_resource(Constants.ASPECT_KEYWORD_RESOURCE),
            Constants.ASPECT_KEYWORD_RESOURCE,
        )
    contents = Utils.read_file_contents(path)
    if contents is None:
        raise FileNotFoundError(f"Unable to read aspect keyword file {path}")
    keywords = parse_aspect_keywords(contents, path)
    if not keywords:
        raise AspectException(f"No usable aspect keywords in {path}")
    return keywords


def match_text(
    text: str,
    keywords: Mapping[str, Sequence[str]],
    mode: str = Constants.ASPECT_MODE_DOUBLE_COUNT,
) -> List[str]:
    """
    Buckets a text counts towards.

    A token matches an aspect when it starts with one of the aspect's
    keywords.  In ``double_count`` mode every matched aspect is returned; in
    ``exclusive`` mode only the aspect of the earliest matching token, ties
    going to the aspect listed first.  A text matching nothing counts as
    ``other``.

    :rtype: List[str]
    """
    if mode not in Constants.ASPECT_MODES:
        raise AspectException(f"Unknown aspect mode {mode!r}")

    matched = []
    for token in WORD_PATTERN.findall(text.lower()):
        for aspect, prefixes in keywords.items():
            if aspect in matched:
                continue
            if any(token.startswith(p) for p in prefixes):
                if mode == Constants.ASPECT_MODE_EXCLUSIVE:
                    return [aspect]
                matched.append(aspect)

    if not matched:
        return [Constants.ASPECT_OTHER]
    return [aspect for aspect in keywords if aspect in matched]


def extract_opinions(
    doc: ArticleDoc,
    keywords: Mapping[str, Sequence[str]] = None,
    mode: str = Constants.ASPECT_MODE_DOUBLE_COUNT,
) -> List[AspectOpinion]:
    """
    One opinion per tweet and counted bucket.

    :rtype: List[AspectOpinion]
    """
    if keywords is None:
        keywords = load_aspect_keywords()
    if not keywords:
        raise AspectException("The aspect keyword table is empty")
    opinions = []
    for tweet in doc.tweets:
        for aspect in match_text(tweet.text, keywords, mode):
            opinions.append(
                AspectOpinion(
                    entity=doc.altmetric_id,
                    aspect=aspect,
                    holder=tweet.tweet_id,
                    time=getattr(tweet, "posted_at", None),
                )
            )
    return opinions


def match_aspects(
    doc: ArticleDoc,
    keywords: Mapping[str, Sequence[str]] = None,
    mode: str = Constants.ASPECT_MODE_DOUBLE_COUNT,
) -> AspectProfile:
    """
    Count the tweets of an article per aspect.

    :param doc: article document
    :type doc: ArticleDoc
    :param keywords: aspect keyword table, the bundled one when ``None``
    :type keywords: Mapping[str, Sequence[str]]
    :param mode: ``double_count`` or ``exclusive``
    :type mode: str

    :rtype: AspectProfile
    """
    if keywords is None:
        keywords = load_aspect_keywords()
    if not keywords:
        raise AspectException("The aspect keyword table is empty")

    counts = {bucket: 0 for bucket in Constants.ASPECT_BUCKETS}
    for tweet in doc.tweets:
        for aspect in match_text(tweet.text, keywords, mode):
            counts[aspect] += 1
    return AspectProfile(
        altmetric_id=doc.altmetric_id,
        counts=counts,
        tweet_count=doc.tweet_count,
        domain_codes=doc.domain_codes,
    )


def domain_aspect_table(profiles: Iterable[AspectProfile]) -> pd.DataFrame:
    """
    Per-discipline share of tweets addressing each aspect, in percent of
    the discipline's tweets.

    An article in several disciplines counts in each.  Rows are ordered by
    descending document count, then discipline.

    :rtype: pd.DataFrame
    """
    groups: Dict[str, List[AspectProfile]] = {}
    for profile in sorted(profiles, key=lambda p: p.altmetric_id):
        for domain in profile.domain_codes:
            groups.setdefault(domain, []).append(profile)

    rows = []
    for domain, group in groups.items():
        tweets = sum(p.tweet_count for p in group)
        row = [domain, len(group)]
        for bucket in Constants.ASPECT_BUCKETS:
            total = sum(p.counts[bucket] for p in group)
            row.append(100.0 * total / tweets if tweets else 0.0)
        rows.append(row)
    rows.sort(key=lambda r: (-r[1], r[0]))
    return pd.DataFrame(rows, columns=ASPECT_TABLE_COLUMNS)
