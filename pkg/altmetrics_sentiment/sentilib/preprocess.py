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
Tweet cleaning.

The cleaning steps run in a fixed order: English check, removal of terms
taken from the article title, entity and markup decoding, mention removal,
URL removal, removal of broken replacement characters, '#' removal, drop of
empty texts, negation expansion and whitespace normalisation.  The
finished text goes through the English check once more.
"""
from __future__ import annotations

import json
import logging
import re
import warnings
from concurrent.futures import Executor
from datetime import datetime
from typing import Dict, Iterable, List, Mapping, Optional

from bs4 import BeautifulSoup, MarkupResemblesLocatorWarning

from altmetrics_sentiment.sentilib.constants import Constants
from altmetrics_sentiment.utils.utils import Utils

warnings.filterwarnings("ignore", category=MarkupResemblesLocatorWarning)

# English function words, contraction stems as split by the word tokenizer,
# the retweet marker and a handful of very frequent English words.
ENGLISH_MARKERS = frozenset(
    """
    i me my myself we our ours ourselves you your yours yourself yourselves
    he him his himself she her hers herself it its itself they them their
    theirs themselves what which who whom this that these those am is are was
    were be been being have has had having do does did doing a an the and but
    if or because as until while of at by for with about against between into
    through during before after above below to from up down in out on off over
    under again further then once here there when where why how all any both
    each few more most other some such no nor not only own same so than too
    very s t can will just don should now d ll m o re ve y ain aren couldn
    didn doesn hadn hasn haven isn ma mightn mustn needn shan shouldn wasn
    weren won wouldn
    could would might must need shall also new via rt
    """.split()
)

MENTION_PATTERN = re.compile(r"@[A-Za-z0-9_]+:?")
URL_PATTERNS = [
    re.compile(r"https?://[A-Za-z0-9./]+", re.IGNORECASE),
    re.compile(r"www\.\S+", re.IGNORECASE),
]
REPLACEMENT_SEQUENCES = ["\ufffd", "ï¿½", "\\xef\\xbf\\xbd"]
WORD_PATTERN = re.compile(r"[^\W_]+")
EDGE_PUNCTUATION = re.compile(r"^[\W_]+|[\W_]+$")


class CleanTweet:
    """
    A tweet after cleaning.

    ``dropped`` is ``None`` for kept tweets, otherwise one of
    ``non-english``, ``duplicate`` or ``empty``.
    """

    def __init__(
        self,
        altmetric_id: str,
        tweet_id: str,
        text: str,
        dropped: str = None,
        posted_at: datetime = None,
        label: str = None,
    ):
        self.altmetric_id = altmetric_id
        self.tweet_id = tweet_id
        self.text = text
        self.dropped = dropped
        self.posted_at = posted_at
        self.label = label

    def copy(self, **changes) -> CleanTweet:
        values = {
            "altmetric_id": self.altmetric_id,
            "tweet_id": self.tweet_id,
            "text": self.text,
            "dropped": self.dropped,
            "posted_at": self.posted_at,
            "label": self.label,
        }
        values.update(changes)
        return CleanTweet(**values)

    def to_dict(self) -> dict:
        """
        Record in the tweet file format, so that a cleaned file can be read
        back by :py:func:`load_tweets`.
        """
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

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), ensure_ascii=False)

    def __str__(self):
        return self.to_json()


class CleanResult(list):
    """
    Cleaned tweets in input order, plus per-reason drop counts.
    """

    def __init__(self, tweets: Iterable[CleanTweet] = ()):
        super().__init__(tweets)
        # Input records rejected before cleaning.
        self.skipped = 0
        self.drop_stats = {reason: 0 for reason in Constants.DROP_REASONS}
        for tweet in self:
            if tweet.dropped:
                self.drop_stats[tweet.dropped] += 1

    def kept(self) -> List[CleanTweet]:
        return [tweet for tweet in self if not tweet.dropped]


def parse_contractions(
    contents: str, source: str = "<contractions>"
) -> Dict[str, str]:
    """
    Parse ``term TAB expansion`` lines.  Expansions must not contain an
    apostrophe.
    """
    table = {}
    for line_number, fields in Utils.iter_table_lines(contents):
        if len(fields) != 2 or not fields[0] or not fields[1]:
            logging.warning(f"{source}:{line_number}: expected 'term TAB expansion'")
            continue
        term, expansion = fields[0].lower(), fields[1].lower()
        if "'" in expansion or "’" in expansion:
            logging.warning(
                f"{source}:{line_number}: expansion of {term} has an apostrophe"
            )
            continue
        table[term] = expansion
    return table


def load_contractions(path: str = None) -> Dict[str, str]:
    """
    Load a contraction table, one ``term TAB expansion`` per line; the
    bundled table when no path is given.

    :param path: contraction file
    :type path: str

    :return: contraction to expansion map
    :rtype: Dict[str, str]
    """
    if path is None:
        return parse_contractions(
            Utils.read_resource(Constants.CONTRACTION_RESOURCE),
            Constants.CONTRACTION_RESOURCE,
        )
    contents = Utils.read_file_contents(path)
    if contents is None:
        raise FileNotFoundError(f"Unable to read contraction file {path}")
    return parse_contractions(contents, path)


class TweetCleaner:
    """
    Cleans tweets with a fixed configuration.

    Instances are immutable and may be shared between worker threads.
    """

    def __init__(
        self,
        english_threshold: float = Constants.DEFAULT_ENGLISH_THRESHOLD,
        title_min_token_len: int = Constants.DEFAULT_TITLE_MIN_TOKEN_LEN,
        contractions: Mapping[str, str] = None,
    ):
        """
        :param english_threshold: minimum share of English marker words
        :type english_threshold: float
        :param title_min_token_len: shortest title term that is removed
        :type title_min_token_len: int
        :param contractions: contraction table, the built-in one when ``None``
        :type contractions: Mapping[str, str]
        """
        self.english_threshold = english_threshold
        self.title_min_token_len = title_min_token_len
        self.contractions = dict(
            load_contractions() if contractions is None else contractions
        )

        # Keys are matched with either apostrophe, longest first, anywhere in
        # the text so that no table entry survives expansion.
        self.__expansions = {}
        alternatives = []
        for term in sorted(self.contractions, key=lambda t: (-len(t), t)):
            key = term.replace("’", "'")
            self.__expansions[key] = self.contractions[term]
            alternatives.append(re.escape(key).replace("'", "['’]"))
        if alternatives:
            self.__negation_pattern = re.compile(
                "|".join(alternatives), re.IGNORECASE
            )
        else:
            self.__negation_pattern = None

    def is_english(self, text: str) -> bool:
        """
        Heuristic English check.

        A text is English when at least ``english_threshold`` of its word
        tokens, numbers included, are English marker words, or when it has
        one or two tokens made of ASCII letters and digits only.

        :param text: text to check
        :type text: str

        :return: ``True`` for English
        :rtype: bool
        """
        tokens = WORD_PATTERN.findall(text.lower())
        if not tokens:
            return False

        if len(tokens) < 3 and all(t.isascii() and t.isalnum() for t in tokens):
            return True

        markers = sum(1 for t in tokens if t in ENGLISH_MARKERS)
        return markers / len(tokens) >= self.english_threshold

    def remove_title_terms(self, text: str, title: Optional[str]) -> str:
        """
        Delete tokens that also occur in the article title.

        Only tokens at least ``title_min_token_len`` long (after stripping
        surrounding punctuation) that are not English marker words are
        removed; matching ignores case.

        :param text: tweet text
        :type text: str
        :param title: article title
        :type title: str

        :return: text without title terms
        :rtype: str
        """
        if not title or not title.strip():
            return text

        title_keys = set()
        for token in title.split():
            key = EDGE_PUNCTUATION.sub("", token.lower())
            if len(key) >= self.title_min_token_len and key not in ENGLISH_MARKERS:
                title_keys.add(key)
        if not title_keys:
            return text

        kept = []
        for token in text.split():
            key = EDGE_PUNCTUATION.sub("", token.lower())
            if key in title_keys:
                continue
            kept.append(token)
        return " ".join(kept)

    def expand_negations(self, text: str) -> str:
        """
        Replace contractions from the table by their two-word form.

        :param text: text
        :type text: str

        :return: expanded text
        :rtype: str
        """
        if self.__negation_pattern is None:
            return text

        def replace(match):
            key = match.group(0).lower().replace("’", "'")
            return self.__expansions[key]

        return self.__negation_pattern.sub(replace, text)

    @staticmethod
    def decode_markup(text: str) -> str:
        """
        Decode HTML entities and drop markup tags, repeated until nothing
        changes.
        """
        while "&" in text or "<" in text:
            decoded = BeautifulSoup(text, "html.parser").get_text()
            if decoded == text:
                break
            text = decoded
        return text

    @staticmethod
    def remove_noise(text: str) -> str:
        """
        Lowercase, decode markup and remove mentions, URLs, broken
        replacement characters and '#', repeated until the text no longer
        changes.
        """
        text = text.lower()
        while True:
            cleaned = TweetCleaner.decode_markup(text)
            for sequence in REPLACEMENT_SEQUENCES:
                cleaned = cleaned.replace(sequence, "")
            cleaned = cleaned.replace("#", "")
            cleaned = MENTION_PATTERN.sub(" ", cleaned)
            for pattern in URL_PATTERNS:
                cleaned = pattern.sub(" ", cleaned)
            if cleaned == text:
                return cleaned
            text = cleaned

    def clean_text(self, text: str, title: str = None) -> Optional[str]:
        """
        Clean a text.

        The English check runs on the raw text first.  The finished text
        is checked once more, so a text that cleaning turned into
        something non-English is dropped rather than kept, and cleaning a
        cleaned text gives the same answer.

        :return: the cleaned text, ``""`` when nothing is left, or ``None``
            when the text is not English
        :rtype: str
        """
        text = text or ""
        if WORD_PATTERN.search(text) and not self.is_english(text):
            return None
        text = self.remove_title_terms(text, title)
        text = self.remove_noise(text)
        # Title terms hidden behind markup or '#' inside a token.
        text = self.remove_title_terms(text, title)
        if not text.strip():
            return ""
        text = self.expand_negations(text)
        text = " ".join(token.lower() for token in text.split())
        if WORD_PATTERN.search(text) and not self.is_english(text):
            return None
        return text

    def clean_tweet(self, raw, title: str = None) -> CleanTweet:
        """
        Clean one tweet.

        :param raw: the tweet
        :type raw: Tweet
        :param title: title of the article the tweet is about
        :type title: str

        :return: the cleaned tweet, possibly marked as dropped
        :rtype: CleanTweet
        """
        text = raw.text or ""
        dropped = None

        if not text.strip():
            cleaned, dropped = "", Constants.DROP_EMPTY
        else:
            cleaned = self.clean_text(text, title)
            if cleaned is None:
                cleaned, dropped = "", Constants.DROP_NON_ENGLISH
            elif not cleaned:
                dropped = Constants.DROP_EMPTY

        return CleanTweet(
            altmetric_id=raw.altmetric_id,
            tweet_id=raw.tweet_id,
            text=cleaned,
            dropped=dropped,
            posted_at=getattr(raw, "posted_at", None),
            label=getattr(raw, "label", None),
        )


def dedupe(tweets: Iterable[CleanTweet]) -> List[CleanTweet]:
    """
    Mark every repeat of an (altmetric id, text) pair as a duplicate.

    The first occurrence in input order is kept.  Tweets that are already
    dropped pass through unchanged.

    :param tweets: cleaned tweets
    :type tweets: Iterable[CleanTweet]

    :return: tweets in input order
    :rtype: List[CleanTweet]
    """
    seen = set()
    result = []
    for tweet in tweets:
        if tweet.dropped:
            result.append(tweet)
            continue
        key = (tweet.altmetric_id, tweet.text)
        if key in seen:
            result.append(tweet.copy(dropped=Constants.DROP_DUPLICATE))
        else:
            seen.add(key)
            result.append(tweet)
    return result


def clean_corpus(
    tweets: Iterable,
    titles: Mapping[str, str] = None,
    cleaner: TweetCleaner = None,
    executor: Executor = None,
) -> CleanResult:
    """
    Clean a stream of tweets and drop the duplicates.

    Cleaning is spread over ``executor`` when one is given; the order of
    the result always follows the input.

    :param tweets: raw tweets
    :type tweets: Iterable[Tweet]
    :param titles: article titles by altmetric id
    :type titles: Mapping[str, str]
    :param cleaner: configured cleaner
    :type cleaner: TweetCleaner
    :param executor: optional executor
    :type executor: Executor

    :return: cleaned tweets with drop statistics
    :rtype: CleanResult
    """
    cleaner = cleaner or TweetCleaner()
    titles = titles or {}

    def clean(raw):
        return cleaner.clean_tweet(raw, titles.get(raw.altmetric_id))

    if executor is None:
        cleaned = [clean(raw) for raw in tweets]
    else:
        cleaned = list(executor.map(clean, tweets, chunksize=256))

    result = CleanResult(dedupe(cleaned))
    result.skipped = getattr(tweets, "skipped", 0)
    logging.info(
        f"Cleaned {len(result)} tweets, kept {len(result.kept())}, "
        f"dropped {result.drop_stats}"
    )
    return result


_default_cleaner = TweetCleaner()


def clean_tweet(raw, title: str = None) -> CleanTweet:
    """
    Clean one tweet with the default settings.
    """
    return _default_cleaner.clean_tweet(raw, title)


def expand_negations(text: str) -> str:
    """
    Expand contractions with the built-in table.
    """
    return _default_cleaner.expand_negations(text)


def is_english(text: str) -> bool:
    return _default_cleaner.is_english(text)


def remove_title_terms(text: str, title: str) -> str:
    return _default_cleaner.remove_title_terms(text, title)
