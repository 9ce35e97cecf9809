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
File based ingest of tweets and article metadata.

Tweets are read from newline-delimited JSON records, article metadata from a
CSV table.  Both are joined per altmetric id into :py:class:`ArticleDoc`
objects for the scoring stages.
"""
from __future__ import annotations

import json
import logging
import time
from abc import ABC, abstractmethod
from collections import OrderedDict
from datetime import datetime
from types import MappingProxyType
from typing import Dict, Iterable, Iterator, Mapping, Optional, Union

import pandas as pd

from altmetrics_sentiment.sentilib.constants import Constants
from altmetrics_sentiment.utils.utils import Utils


class CorpusException(Exception):
    """
    Fatal input error while reading a corpus or metadata file.
    """

    pass


class CitationSourceException(Exception):
    """
    Retriable failure of a citation source, distinct from an id that is not
    known to the source.
    """

    pass


class Tweet:
    """
    One post linked to an article.
    """

    def __init__(
        self,
        altmetric_id: str,
        tweet_id: str,
        text: str,
        posted_at: datetime = None,
        label: str = None,
    ):
        """
        :param altmetric_id: article key
        :type altmetric_id: str
        :param tweet_id: tweet key
        :type tweet_id: str
        :param text: raw text, may be empty
        :type text: str
        :param posted_at: UTC timestamp
        :type posted_at: datetime
        :param label: optional gold trinary label
        :type label: str
        """
        self.altmetric_id = altmetric_id
        self.tweet_id = tweet_id
        self.text = text
        self.posted_at = posted_at
        self.label = label

    def to_dict(self) -> dict:
        d = {
            "altmetric_id": self.altmetric_id,
            "tweet_id": self.tweet_id,
            "text": self.text,
        }
        if self.posted_at is not None:
            d["posted_at"] = self.posted_at.isoformat()
        if self.label is not None:
            d["label"] = self.label
        return d

    def __str__(self):
        return json.dumps(self.to_dict(), ensure_ascii=False)


class ArticleMeta:
    """
    Metadata of one article: title, citation count and discipline codes.
    """

    def __init__(
        self,
        altmetric_id: str,
        title: str = None,
        citation_count: int = 0,
        domain_codes: Iterable[str] = (),
    ):
        self.altmetric_id = altmetric_id
        self.title = title
        self.citation_count = citation_count
        self.domain_codes = frozenset(domain_codes)

    def to_dict(self) -> dict:
        return {
            "altmetric_id": self.altmetric_id,
            "title": self.title,
            "citation_count": self.citation_count,
            "domain_codes": sorted(self.domain_codes),
        }

    def __str__(self):
        return json.dumps(self.to_dict(), ensure_ascii=False)


class ArticleDoc:
    """
    All cleaned tweets about one article merged into one document.
    """

    def __init__(
        self,
        altmetric_id: str,
        tweets: list,
        domain_codes: Iterable[str] = (),
        citation_count: int = 0,
        title: str = None,
    ):
        self.altmetric_id = altmetric_id
        self.tweets = list(tweets)
        self.domain_codes = frozenset(domain_codes)
        self.citation_count = citation_count
        self.title = title

    @property
    def tweet_count(self) -> int:
        return len(self.tweets)

    def to_dict(self) -> dict:
        return {
            "altmetric_id": self.altmetric_id,
            "tweet_count": self.tweet_count,
            "citation_count": self.citation_count,
            "domain_codes": sorted(self.domain_codes),
        }

    def __str__(self):
        return json.dumps(self.to_dict(), ensure_ascii=False)


class JoinResult(list):
    """
    The article documents produced by :py:func:`join`, plus the number of
    articles discarded by the tweet cutoff and the number of emitted
    articles that had no metadata.
    """

    def __init__(self, docs: Iterable[ArticleDoc] = (), discarded: int = 0):
        super().__init__(docs)
        self.discarded = discarded
        self.missing_metadata = 0


def parse_timestamp(value: Union[str, None]) -> Optional[datetime]:
    """
    Parse an ISO-8601 timestamp into an aware UTC datetime.

    Naive timestamps are taken to be UTC.

    :param value: timestamp string, or ``None``
    :type value: str

    :return: UTC datetime or ``None`` when no value is given
    :rtype: datetime

    :raises ValueError: when the value is not a timestamp
    """
    if value is None or (isinstance(value, str) and value.strip() == ""):
        return None
    if not isinstance(value, str):
        raise ValueError(f"posted_at must be a string: {value!r}")
    ts = pd.Timestamp(value.strip())
    if pd.isna(ts):
        raise ValueError(f"Invalid posted_at: {value!r}")
    if ts.tzinfo is None:
        ts = ts.tz_localize("UTC")
    else:
        ts = ts.tz_convert("UTC")
    return ts.to_pydatetime()


class TweetStream:
    """
    Lazily reads tweets from a newline-delimited JSON file.

    After a full iteration, ``records`` holds the number of non-blank lines
    seen, ``yielded`` the number of tweets produced and ``skipped`` the number
    of malformed records; ``records == yielded + skipped``.
    """

    def __init__(self, path: str):
        self.path = path
        self.records = 0
        self.yielded = 0
        self.skipped = 0

        try:
            with open(path, "rb"):
                pass
        except OSError as e:
            raise CorpusException(f"Unable to read tweet file {path}: {e}")

    def __iter__(self) -> Iterator[Tweet]:
        self.records = 0
        self.yielded = 0
        self.skipped = 0
        path = self.path

        try:
            with open(path, "rb") as f:
                for line_number, raw in enumerate(f, start=1):
                    if not raw.strip():
                        continue
                    self.records += 1
                    try:
                        tweet = self.parse_record(raw.decode("utf-8"))
                    except ValueError as e:
                        # UnicodeDecodeError included
                        self.skipped += 1
                        logging.warning(f"{path}:{line_number}: skipping record: {e}")
                        continue
                    self.yielded += 1
                    yield tweet
        except OSError as e:
            raise CorpusException(f"Unable to read tweet file {self.path}: {e}")

        if self.skipped:
            logging.warning(
                f"{self.path}: skipped {self.skipped} malformed "
                f"of {self.records} records"
            )

    @staticmethod
    def parse_record(line: str) -> Tweet:
        """
        Parse one JSON line into a :py:class:`Tweet`.

        :raises ValueError: when the record is malformed
        """
        try:
            record = json.loads(line)
        except json.JSONDecodeError as e:
            raise ValueError(f"invalid JSON ({e.msg})")

        if not isinstance(record, dict):
            raise ValueError("record is not an object")

        ids = {}
        for field in ("altmetric_id", "tweet_id"):
            value = record.get(field)
            if isinstance(value, bool) or not isinstance(value, (str, int)):
                raise ValueError(f"missing {field}")
            value = str(value).strip()
            if not value:
                raise ValueError(f"missing {field}")
            ids[field] = value

        text = record.get("text")
        if text is None:
            text = ""
        if not isinstance(text, str):
            raise ValueError("text is not a string")

        posted_at = parse_timestamp(record.get("posted_at"))

        label = record.get("label")
        if label is not None:
            label = str(label).strip().lower()
            if label not in (Constants.POSITIVE, Constants.NEGATIVE, Constants.NEUTRAL):
                raise ValueError(f"unknown label {record.get('label')!r}")

        return Tweet(
            altmetric_id=ids["altmetric_id"],
            tweet_id=ids["tweet_id"],
            text=text,
            posted_at=posted_at,
            label=label,
        )


def load_tweets(path: str) -> TweetStream:
    """
    Stream tweets from a newline-delimited JSON file.

    Each line holds ``altmetric_id``, ``tweet_id``, ``text`` and the optional
    ``posted_at`` (ISO-8601) and ``label`` fields.  Malformed records are
    skipped with a warning and counted on the returned stream.

    :param path: tweet file
    :type path: str

    :return: tweet stream
    :rtype: TweetStream

    :raises CorpusException: if the file cannot be read
    """
    return TweetStream(path)


def normalize_domain(
    name: str, domain_mapping: Mapping[str, str] = None
) -> Optional[str]:
    """
    Map a discipline name, alias or mapped subject code onto the closed
    discipline vocabulary.

    :return: canonical discipline name, or ``None`` if unknown
    :rtype: str
    """
    name = name.strip()
    if domain_mapping and name in domain_mapping:
        name = domain_mapping[name]
    name = Constants.DISCIPLINE_ALIASES.get(name, name)
    if name in Constants.DISCIPLINES:
        return name
    return None


def load_domain_mapping(path: str) -> Dict[str, str]:
    """
    Load a user supplied ``code TAB discipline`` table, for article files that
    carry raw subject classification codes.

    Entries pointing outside the discipline vocabulary are rejected with a
    warning.

    :param path: mapping file
    :type path: str

    :return: code to discipline map
    :rtype: Dict[str, str]
    """
    contents = Utils.read_file_contents(path)
    if contents is None:
        raise CorpusException(f"Unable to read domain mapping file {path}")

    mapping = {}
    for line_number, fields in Utils.iter_table_lines(contents):
        if len(fields) != 2 or not fields[0]:
            logging.warning(f"{path}:{line_number}: expected 'code TAB discipline'")
            continue
        code, discipline = fields
        canonical = normalize_domain(discipline)
        if canonical is None:
            logging.warning(
                f"{path}:{line_number}: unknown discipline '{discipline}' for {code}"
            )
            continue
        mapping[code] = canonical
    return mapping


def load_articles(
    path: str, domain_mapping: Mapping[str, str] = None
) -> Mapping[str, ArticleMeta]:
    """
    Load article metadata from a CSV file with a header row and the columns
    ``altmetric_id``, ``title``, ``citation_count`` and ``domain_codes``
    (semicolon separated).

    Rows with an unknown discipline or a bad citation count are rejected with
    a warning.  A later row for the same id replaces the earlier one, also
    with a warning.

    :param path: article file
    :type path: str
    :param domain_mapping: optional code to discipline map
    :type domain_mapping: Mapping[str, str]

    :return: read-only map of altmetric id to metadata
    :rtype: Mapping[str, ArticleMeta]

    :raises CorpusException: if the file cannot be read or lacks a column
    """
    try:
        df = pd.read_csv(path, dtype=str, keep_default_na=False, encoding="utf-8")
    except pd.errors.EmptyDataError:
        return MappingProxyType({})
    except (OSError, UnicodeDecodeError, pd.errors.ParserError) as e:
        raise CorpusException(f"Unable to read article file {path}: {e}")

    df.columns = [str(c).strip() for c in df.columns]
    missing = [
        c
        for c in ("altmetric_id", "title", "citation_count", "domain_codes")
        if c not in df.columns
    ]
    if missing:
        raise CorpusException(f"Article file {path} is missing columns {missing}")

    articles = {}
    for row_number, row in enumerate(df.itertuples(index=False), start=2):
        altmetric_id = row.altmetric_id.strip()
        if not altmetric_id:
            logging.warning(f"{path}:{row_number}: rejected row without altmetric_id")
            continue

        citations = row.citation_count.strip() or "0"
        try:
            citation_count = int(citations)
        except ValueError:
            citation_count = -1
        if citation_count < 0:
            logging.warning(
                f"{path}:{row_number}: rejected {altmetric_id}, "
                f"bad citation_count {row.citation_count!r}"
            )
            continue

        domains = set()
        unknown = []
        for code in row.domain_codes.split(";"):
            if not code.strip():
                continue
            canonical = normalize_domain(code, domain_mapping)
            if canonical is None:
                unknown.append(code.strip())
            else:
                domains.add(canonical)
        if unknown:
            logging.warning(
                f"{path}:{row_number}: rejected {altmetric_id}, "
                f"unknown domain {unknown}"
            )
            continue

        if altmetric_id in articles:
            logging.warning(
                f"{path}:{row_number}: duplicate {altmetric_id} overwrites earlier row"
            )

        title = row.title.strip() or None
        articles[altmetric_id] = ArticleMeta(
            altmetric_id=altmetric_id,
            title=title,
            citation_count=citation_count,
            domain_codes=domains,
        )

    return MappingProxyType(articles)


def join(
    tweets: Iterable, meta: Mapping[str, ArticleMeta], min_tweets: int
) -> JoinResult:
    """
    Group cleaned tweets per article and keep the articles that have at
    least ``min_tweets`` of them.

    Dropped tweets are ignored.  The result is sorted by altmetric id and
    keeps input order within each article, so it does not depend on how
    the stream was produced.

    :param tweets: cleaned tweets
    :type tweets: Iterable[CleanTweet]
    :param meta: article metadata
    :type meta: Mapping[str, ArticleMeta]
    :param min_tweets: inclusive cutoff
    :type min_tweets: int

    :return: article documents
    :rtype: JoinResult
    """
    if min_tweets < 1:
        raise CorpusException(f"min_tweets must be >= 1, got {min_tweets}")

    groups = OrderedDict()
    for tweet in tweets:
        if getattr(tweet, "dropped", None):
            continue
        groups.setdefault(tweet.altmetric_id, []).append(tweet)

    result = JoinResult()
    for altmetric_id in sorted(groups):
        group = groups[altmetric_id]
        if len(group) < min_tweets:
            result.discarded += 1
            continue

        article = meta.get(altmetric_id)
        if article is None:
            result.missing_metadata += 1
            logging.warning(f"No metadata for article {altmetric_id}")
            article = ArticleMeta(altmetric_id=altmetric_id)

        result.append(
            ArticleDoc(
                altmetric_id=altmetric_id,
                tweets=group,
                domain_codes=article.domain_codes,
                citation_count=article.citation_count,
                title=article.title,
            )
        )

    logging.info(
        f"Joined {len(result)} articles, discarded {result.discarded} below "
        f"{min_tweets} tweets"
    )
    return result


class CitationSource(ABC):
    """
    Looks up citation counts by altmetric id.
    """

    @abstractmethod
    def get_citation_count(self, altmetric_id: str) -> Optional[int]:
        """
        :return: the citation count, or ``None`` if the id is not known
        :rtype: int

        :raises CitationSourceException: on a retriable failure
        """


class FileCitationSource(CitationSource):
    """
    Citation source backed by an ``altmetric_id,citation_count`` CSV file or
    by an already loaded article map.
    """

    def __init__(
        self, path: str = None, articles: Mapping[str, ArticleMeta] = None
    ):
        self.counts = {}
        if articles is not None:
            for altmetric_id, article in articles.items():
                self.counts[altmetric_id] = article.citation_count
        if path is not None:
            self.__load(path)

    def __load(self, path: str):
        try:
            df = pd.read_csv(path, dtype=str, keep_default_na=False, encoding="utf-8")
        except pd.errors.EmptyDataError:
            return
        except (OSError, UnicodeDecodeError, pd.errors.ParserError) as e:
            raise CitationSourceException(f"Unable to read citation file {path}: {e}")

        df.columns = [str(c).strip() for c in df.columns]
        if "altmetric_id" not in df.columns or "citation_count" not in df.columns:
            raise CorpusException(
                f"Citation file {path} needs altmetric_id and citation_count columns"
            )

        for row in df.itertuples(index=False):
            try:
                count = int(row.citation_count)
            except ValueError:
                logging.warning(f"{path}: bad citation_count for {row.altmetric_id}")
                continue
            if count < 0:
                logging.warning(
                    f"{path}: negative citation_count for {row.altmetric_id}"
                )
                continue
            self.counts[row.altmetric_id.strip()] = count

    def get_citation_count(self, altmetric_id: str) -> Optional[int]:
        return self.counts.get(altmetric_id)


def fetch_citations(
    client: CitationSource,
    ids: Iterable[str],
    retries: int = 2,
    backoff: float = 0.0,
) -> Dict[str, int]:
    """
    Look up citation counts for the given ids.

    Ids unknown to the client are left out of the result.  A client failure
    is retried up to ``retries`` times before it is propagated.

    :param client: citation source
    :type client: CitationSource
    :param ids: altmetric ids
    :type ids: Iterable[str]
    :param retries: number of retries per id
    :type retries: int
    :param backoff: seconds to sleep between attempts
    :type backoff: float

    :return: id to citation count
    :rtype: Dict[str, int]

    :raises CitationSourceException: when an id still fails after the retries
    """
    counts = {}
    for altmetric_id in ids:
        attempt = 0
        while True:
            try:
                count = client.get_citation_count(altmetric_id)
                break
            except CitationSourceException as e:
                if attempt >= retries:
                    logging.error(f"Citation lookup for {altmetric_id} failed: {e}")
                    raise
                attempt += 1
                logging.warning(
                    f"Citation lookup for {altmetric_id} failed, retry {attempt}: {e}"
                )
                if backoff:
                    time.sleep(backoff)
        if count is not None:
            counts[altmetric_id] = count
    return counts
