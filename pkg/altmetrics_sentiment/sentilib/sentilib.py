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
This module contains the :py:class:`SentilibManager`, which runs the
tweet sentiment pipeline: cleaning, lexicon generation and the article
level analysis, and writes their reports.

Typical use::

    from altmetrics_sentiment.sentilib.sentilib import SentilibManager

    with SentilibManager(tweets_file="tweets.jsonl",
                         articles_file="articles.csv") as manager:
        manager.analyze()
"""
from __future__ import annotations

import json
import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Any, Dict, List, Mapping, Tuple, Union

import jinja2
import pandas as pd
from tabulate import tabulate

from altmetrics_sentiment.sentilib import report
from altmetrics_sentiment.sentilib.aspects import (
    domain_aspect_table,
    extract_opinions,
    load_aspect_keywords,
    match_aspects,
)
from altmetrics_sentiment.sentilib.config.config import Config, ConfigException
from altmetrics_sentiment.sentilib.constants import Constants
from altmetrics_sentiment.sentilib.corpus import (
    ArticleMeta,
    CorpusException,
    FileCitationSource,
    fetch_citations,
    join,
    load_articles,
    load_domain_mapping,
    load_tweets,
)
from altmetrics_sentiment.sentilib.lexgen import (
    VIEW_NEGATIVE,
    VIEW_POSITIVE,
    LexiconTable,
    export_strength_list,
    generate_lexicon,
)
from altmetrics_sentiment.sentilib.optimizer import (
    OptimizationResult,
    optimize_strengths,
)
from altmetrics_sentiment.sentilib.preprocess import (
    CleanResult,
    TweetCleaner,
    clean_corpus,
    load_contractions,
)
from altmetrics_sentiment.sentilib.report import ReportWriter
from altmetrics_sentiment.sentilib.strength import (
    SentimentScore,
    StrengthLexicon,
    build_lexicon,
    classify_trinary,
    load_boosters,
    load_default_lexicon,
    load_emoticons,
    load_inverters,
    load_strength_lexicon,
    score_text,
    score_texts,
)
from altmetrics_sentiment.sentilib.summarize import (
    ArticleSentiment,
    DomainSummary,
    article_label_distribution,
    article_score,
    citation_correlation,
    distribution_by_year,
    domain_scatter,
    domain_summary,
    normal_fit,
    score_histogram,
)


class SentilibManager(Config):
    """
    The main class to use when running the pipeline.
    """

    thread_pool_executor = None

    def __init__(
        self,
        sentilib_rc: str = None,
        output_dir: str = None,
        workers: int = None,
        log_level: str = None,
        log_file: str = None,
        output: str = None,
        **kwargs,
    ):
        """
        ``SentilibManager`` gathers its configuration from:

            - constructor parameters (high priority)

            - a configuration file (medium priority)

            - environment variables (low priority)

            - defaults (if needed, and when possible)

        :param sentilib_rc: path to the configuration file; ``./sentilib_rc``
            is used when present
        :param output_dir: directory the reports are written to
        :param workers: number of worker threads; results do not depend on it
        :param log_level: ``DEBUG``, ``INFO``, ``WARNING``, ``ERROR`` or
            ``CRITICAL``
        :param log_file: log file; logs go to stderr when empty
        :param output: console table format, ``text`` (default), ``json``,
            ``list`` or ``pandas``
        :param kwargs: any other configuration key, e.g. ``tweets_file``

        :raises ConfigException: for a missing configuration file or an
            invalid value
        """
        super().__init__(
            sentilib_rc=sentilib_rc,
            output_dir=output_dir,
            workers=workers,
            log_level=log_level,
            log_file=log_file,
            **kwargs,
        )
        self.output = output if output is not None else "text"
        self.setup_logging()
        self.thread_pool_executor = ThreadPoolExecutor(self.get_workers())
        self.__lexicon = None

    def __enter__(self):
        return self

    def __exit__(self, exc_type, exc_value, traceback):
        self.close()

    def close(self):
        """
        Shut the worker pool down.
        """
        if self.thread_pool_executor is not None:
            self.thread_pool_executor.shutdown(wait=True)
            self.thread_pool_executor = None

    def get_thread_pool_executor(self) -> ThreadPoolExecutor:
        """
        Get the :py:class:`ThreadPoolExecutor` the pipeline stages run on.
        """
        return self.thread_pool_executor

    def get_report_writer(self) -> ReportWriter:
        return ReportWriter(self.get_output_dir())

    def get_cleaner(self) -> TweetCleaner:
        path = self.get(Constants.CONTRACTION_FILE)
        return TweetCleaner(
            english_threshold=self.get_english_threshold(),
            title_min_token_len=self.get_title_min_token_len(),
            contractions=load_contractions(path) if path else None,
        )

    def get_lexicon(self) -> StrengthLexicon:
        """
        Get the configured strength lexicon.

        The bundled seed lexicon is used for any list that is not
        configured.

        :rtype: StrengthLexicon
        """
        if self.__lexicon is not None:
            return self.__lexicon

        path = self.get(Constants.STRENGTH_LIST_FILE)
        booster_path = self.get(Constants.BOOSTER_FILE)
        inverter_path = self.get(Constants.INVERTER_FILE)
        emoticon_path = self.get(Constants.EMOTICON_FILE)
        if path:
            lexicon = load_strength_lexicon(
                path,
                booster_path=booster_path,
                inverter_path=inverter_path,
                emoticon_path=emoticon_path,
            )
        elif booster_path or inverter_path or emoticon_path:
            lexicon = build_lexicon(
                term_strengths=load_default_lexicon().term_strengths,
                boosters=load_boosters(booster_path),
                inverters=load_inverters(inverter_path),
                emoticons=load_emoticons(emoticon_path),
            )
        else:
            lexicon = load_default_lexicon()
        logging.info(f"Using a lexicon of {len(lexicon)} terms")
        self.__lexicon = lexicon
        return lexicon

    def get_aspect_keywords(self):
        return load_aspect_keywords(self.get(Constants.ASPECT_KEYWORD_FILE))

    def get_articles(self) -> Mapping[str, ArticleMeta]:
        self.require(Constants.ARTICLES_FILE)
        mapping_path = self.get(Constants.DOMAIN_MAPPING_FILE)
        mapping = load_domain_mapping(mapping_path) if mapping_path else None
        return load_articles(self.get(Constants.ARTICLES_FILE), domain_mapping=mapping)

    def clean(self, articles: Mapping[str, ArticleMeta] = None) -> CleanResult:
        """
        Load and clean the configured tweet file.

        Cleaning is idempotent, so an already cleaned file passes through
        unchanged.

        :param articles: article metadata providing the titles
        :type articles: Mapping[str, ArticleMeta]

        :return: cleaned tweets
        :rtype: CleanResult

        :raises CorpusException: if the file cannot be read or holds no
            valid tweet
        """
        self.require(Constants.TWEETS_FILE)
        stream = load_tweets(self.get(Constants.TWEETS_FILE))
        titles = {}
        if articles:
            titles = {k: v.title for k, v in articles.items() if v.title}

        result = clean_corpus(
            stream,
            titles=titles,
            cleaner=self.get_cleaner(),
            executor=self.get_thread_pool_executor(),
        )
        if stream.yielded == 0:
            raise CorpusException(f"No valid tweets in {stream.path}")
        return result

    def preprocess(self) -> CleanResult:
        """
        Clean the tweet file and write the cleaned tweets and the drop
        statistics.

        Titles are removed when an article file is configured.

        :return: cleaned tweets
        :rtype: CleanResult
        """
        articles = self.get_articles() if self.get(Constants.ARTICLES_FILE) else None
        result = self.clean(articles)
        kept = result.kept()

        writer = self.get_report_writer()
        writer.write_jsonl(Constants.CLEANED_TWEETS_FILE, [t.to_dict() for t in kept])
        writer.write_csv(
            Constants.DROP_STATS_FILE,
            report.drop_stats_frame(result.drop_stats, len(kept), result.skipped),
        )
        return result

    def __training_corpus(self, kept) -> Tuple[List[Tuple[Any, str]], bool]:
        labelled = [t for t in kept if t.label is not None]
        if kept and len(labelled) == len(kept):
            logging.info("Using the gold labels of the input tweets")
            return [(t, t.label) for t in kept], True

        if labelled:
            logging.warning(
                f"Only {len(labelled)} of {len(kept)} tweets carry a label; "
                "labelling every tweet with the strength lexicon"
            )
        scores = score_texts(
            self.get_lexicon(),
            [t.text for t in kept],
            executor=self.get_thread_pool_executor(),
        )
        return [(t, classify_trinary(s)) for t, s in zip(kept, scores)], False

    def lexgen(
        self,
        optimize: bool = False,
        min_gain: int = Constants.DEFAULT_MIN_GAIN,
        max_passes: int = Constants.DEFAULT_MAX_PASSES,
    ) -> Tuple[LexiconTable, Union[OptimizationResult, None]]:
        """
        Generate a scored lexicon from the tweet file and export the best
        tokens as a strength list.

        :param optimize: also tune the exported strengths against the gold
            labels
        :type optimize: bool
        :param min_gain: smallest accepted gain while tuning
        :type min_gain: int
        :param max_passes: tuning pass limit
        :type max_passes: int

        :return: the lexicon table and the tuning result, if any
        :rtype: Tuple[LexiconTable, OptimizationResult]
        """
        cleaned = self.clean()
        kept = cleaned.kept()
        if not kept:
            raise CorpusException("Every tweet was dropped during cleaning")
        corpus, gold = self.__training_corpus(kept)

        table = generate_lexicon(corpus, min_total_freq=self.get_min_total_freq())
        top_k = self.get_top_k()

        writer = self.get_report_writer()
        writer.write_csv(
            Constants.LEXICON_TABLE_FILE,
            table.to_dataframe(VIEW_POSITIVE),
            float_format=Constants.LEXICON_FLOAT_FORMAT,
        )
        writer.write_csv(
            Constants.APPENDIX_POSITIVE_FILE,
            table.top(top_k, VIEW_POSITIVE),
            float_format=Constants.LEXICON_FLOAT_FORMAT,
        )
        writer.write_csv(
            Constants.APPENDIX_NEGATIVE_FILE,
            table.top(top_k, VIEW_NEGATIVE),
            float_format=Constants.LEXICON_FLOAT_FORMAT,
        )
        writer.write_csv(
            Constants.TOKEN_SCATTER_FILE,
            table.scatter(),
            float_format=Constants.LEXICON_FLOAT_FORMAT,
        )

        if len(table) == 0:
            logging.warning("The lexicon table is empty; no strength list exported")
            return table, None

        base = self.get_lexicon()
        exported = export_strength_list(
            table, top_k=top_k, band=self.get_strength_band(), base=base
        )
        writer.write_text(Constants.STRENGTH_EXPORT_FILE, exported.to_tsv())

        if not optimize:
            return table, None
        if not gold:
            logging.warning("Strength tuning needs gold labels; skipped")
            return table, None

        result = optimize_strengths(
            base.with_strengths(exported.term_strengths),
            [(t.text, label) for t, label in corpus],
            min_gain=min_gain,
            max_passes=max_passes,
            executor=self.get_thread_pool_executor(),
        )
        writer.write_text(Constants.OPTIMIZED_STRENGTH_FILE, result.lexicon.to_tsv())
        writer.write_csv(
            Constants.OPTIMIZER_AUDIT_FILE, report.audit_frame(result.audit)
        )
        logging.info(f"Strength tuning: {result}")
        return table, result

    def analyze(self) -> Tuple[List[ArticleSentiment], List[DomainSummary]]:
        """
        Score every article with enough tweets and write the article,
        discipline, distribution, correlation and aspect reports.

        When no article qualifies the reports are written empty.

        :return: article sentiments and discipline summaries
        :rtype: Tuple[List[ArticleSentiment], List[DomainSummary]]
        """
        self.require(Constants.TWEETS_FILE, Constants.ARTICLES_FILE)
        articles = self.get_articles()
        kept = self.clean(articles).kept()
        lexicon = self.get_lexicon()
        executor = self.get_thread_pool_executor()

        scores = score_texts(lexicon, [t.text for t in kept], executor=executor)
        score_of = {id(t): s for t, s in zip(kept, scores)}

        min_tweets = self.get_min_tweets()
        docs = join(kept, articles, min_tweets)
        if not docs:
            logging.warning(f"No article has at least {min_tweets} tweets")

        sents = [
            article_score(
                doc,
                lexicon,
                min_tweets=min_tweets,
                pos_threshold=self.get_pos_threshold(),
                neg_threshold=self.get_neg_threshold(),
                scores=[score_of[id(t)] for t in doc.tweets],
            )
            for doc in docs
        ]

        citations_path = self.get(Constants.CITATIONS_FILE)
        client = FileCitationSource(path=citations_path, articles=articles)
        citations = fetch_citations(client, [s.altmetric_id for s in sents])
        for sent in sents:
            sent.citation_count = citations.get(sent.altmetric_id, sent.citation_count)

        summaries = domain_summary(sents)
        bins = self.get_correlation_bins()
        method = self.get_correlation_method()
        correlation = citation_correlation(sents, citations, bins, method)

        keywords = self.get_aspect_keywords()
        mode = self.get_aspect_mode()
        profiles = list(executor.map(lambda d: match_aspects(d, keywords, mode), docs))
        opinions = [
            opinion
            for doc in docs
            for opinion in extract_opinions(doc, keywords, mode)
        ]

        labels = [(t.posted_at, classify_trinary(s)) for t, s in zip(kept, scores)]

        writer = self.get_report_writer()
        writer.write_csv(Constants.ARTICLE_SENTIMENT_FILE, report.article_frame(sents))
        writer.write_csv(Constants.DOMAIN_SUMMARY_FILE, report.domain_frame(summaries))
        writer.write_csv(Constants.DISTRIBUTION_FILE, distribution_by_year(labels))
        writer.write_csv(Constants.NORMAL_FIT_FILE, normal_fit(summaries))
        writer.write_csv(
            Constants.CORRELATION_FILE, report.correlation_frame(correlation, method)
        )
        writer.write_csv(
            Constants.ASPECT_SUMMARY_FILE,
            report.aspect_frame(domain_aspect_table(profiles), mode),
        )
        writer.write_csv(
            Constants.ARTICLE_DISTRIBUTION_FILE, article_label_distribution(sents)
        )
        writer.write_csv(
            Constants.HISTOGRAM_FILE, score_histogram(sents, self.get_histogram_bins())
        )
        writer.write_csv(Constants.DOMAIN_SCATTER_FILE, domain_scatter(sents))
        writer.write_csv(Constants.ASPECT_OPINIONS_FILE, report.opinion_frame(opinions))
        return sents, summaries

    def score(self, text: str) -> Tuple[SentimentScore, str, str]:
        """
        Score one text with the configured lexicon.

        :param text: text to score
        :type text: str

        :return: score, trinary label and the line rendered with the
            ``score_template``
        :rtype: Tuple[SentimentScore, str, str]
        """
        result = score_text(self.get_lexicon(), text)
        label = classify_trinary(result)
        return result, label, self.render_template(self.get_score_template(), result)

    @staticmethod
    def render_template(input_string: str, result: SentimentScore) -> str:
        environment = jinja2.Environment()
        try:
            template = environment.from_string(input_string)
        except jinja2.TemplateSyntaxError as e:
            raise ConfigException(f"Invalid score_template: {e}")
        return template.render(
            positive=result.positive,
            negative=result.negative,
            label=classify_trinary(result),
        )

    def show_config(self, output: str = None, quiet: bool = False):
        """
        Show a table containing the current configuration parameters, one
        row per known key; unset keys show as ``None``.

        :param output: ``text``, ``json``, ``list`` or ``pandas``
        :type output: str
        :param quiet: do not print the table
        :type quiet: bool
        """
        config = self.get_config()
        return self.show_table(
            {attr: config.get(attr) for attr in self.REQUIRED_ATTRS},
            output=output,
            quiet=quiet,
            pretty_names_dict=self.get_config_pretty_names_dict(),
        )

    @staticmethod
    def list_table_text(
        table: List[List[Any]],
        headers: Union[List[str], None] = None,
        quiet: bool = False,
    ):
        """
        Format a table as text.

        This is a helper method called by :py:meth:`list_table()`; you
        should use that method instead of invoking this directly.

        :param table: A list that :py:func:`tabulate()` can use.
        :param headers: List of column headers.
        :param quiet: Print the table when ``False``.

        :return: A table-formatted string.
        """
        if headers is not None:
            printable_table = tabulate(table, headers=headers)
        else:
            printable_table = tabulate(table)

        if not quiet:
            print(f"\n{printable_table}")

        return printable_table

    @staticmethod
    def list_table_json(data: List[Dict[str, Any]], quiet: bool = False):
        json_str = json.dumps(data, indent=4, default=str)

        if not quiet:
            print(f"{json_str}")

        return json_str

    @staticmethod
    def list_table_list(data: List[Dict[str, Any]], quiet: bool = False):
        if not quiet:
            print(f"{data}")

        return data

    @staticmethod
    def list_table_pandas(
        table: List[List[Any]], headers: List[str], quiet: bool = False
    ) -> pd.DataFrame:
        df = pd.DataFrame(table, columns=headers)

        if not quiet:
            print(df.to_string(index=False))

        return df

    def list_table(
        self,
        data: List[Dict[str, Any]],
        fields: Union[List[str], None] = None,
        output: Union[str, None] = None,
        quiet: bool = False,
        pretty_names_dict: Dict[str, str] = None,
    ):
        """
        Format a list of records as a table.

        :param data: Data to be formatted.
        :param fields: List of column headings.
        :param output: Output format, which can be one of ``"text"``,
            ``"json"``, ``"list"``, or ``"pandas"``.
        :param quiet: Do not print the table when ``True``.
        :param pretty_names_dict: A mapping from non-pretty names to
            pretty names, used in column headings.

        :return: Input :py:obj:`data` formatted as a table.
        """
        pretty_names_dict = pretty_names_dict or {}
        if output is None:
            output = self.output.lower()

        if fields is None and len(data) > 0:
            fields = list(data[0].keys())

        if fields is None:
            fields = []

        headers = [pretty_names_dict.get(field, field) for field in fields]

        if output == "text":
            table = self.create_list_table(data, fields=fields)
            return self.list_table_text(table, headers=headers, quiet=quiet)
        elif output == "json":
            return self.list_table_json(data, quiet=quiet)
        elif output == "list":
            return self.list_table_list(data, quiet=quiet)
        elif output == "pandas":
            table = self.create_list_table(data, fields=fields)
            return self.list_table_pandas(table, headers=headers, quiet=quiet)
        else:
            logging.error(f"Unknown output type: {output}")

    def show_table(
        self,
        data: Dict[str, Any],
        fields: Union[List[str], None] = None,
        output: Union[str, None] = None,
        quiet: bool = False,
        pretty_names_dict: Dict[str, str] = None,
    ):
        """
        Format one record as a two column table.

        :param data: Data to be presented in the table.
        :param fields: Keys to show, all of them when ``None``.
        :param output: The table format, ``"text"``, ``"json"``, ``"list"``
            or ``"pandas"``.
        :param quiet: Do not print the table when ``True``.
        :param pretty_names_dict: A mapping from non-pretty names to
            pretty names.

        :return: Input :py:obj:`data` formatted as a table.
        """
        if output is None:
            output = self.output.lower()

        table = self.create_show_table(
            data, fields=fields, pretty_names_dict=pretty_names_dict or {}
        )

        if output == "text":
            return self.list_table_text(table, quiet=quiet)
        elif output == "json":
            return self.list_table_json(data, quiet=quiet)
        elif output == "list":
            return self.list_table_list(data, quiet=quiet)
        elif output == "pandas":
            return self.list_table_pandas(
                table, headers=["Property", "Value"], quiet=quiet
            )
        else:
            logging.error(f"Unknown output type: {output}")

    @staticmethod
    def create_list_table(
        data: List[Dict[str, Any]], fields: Union[List[str], None] = None
    ) -> List[List[Any]]:
        table = []
        for entry in data:
            row = []
            for field in fields:
                row.append(entry.get(field, ""))

            table.append(row)
        return table

    @staticmethod
    def create_show_table(
        data: Dict[str, Any],
        fields: Union[List[str], None] = None,
        pretty_names_dict: Dict[str, str] = None,
    ) -> List[List[Any]]:
        pretty_names_dict = pretty_names_dict or {}
        if fields is None:
            fields = list(data.keys())
        return [[pretty_names_dict.get(field, field), data[field]] for field in fields]
