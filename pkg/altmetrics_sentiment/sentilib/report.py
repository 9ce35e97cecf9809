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
Report tables and the files they are written to.
"""
from __future__ import annotations

import json
import logging
import os
from typing import Iterable, List, Mapping, Sequence

import pandas as pd

from altmetrics_sentiment.sentilib.aspects import AspectOpinion
from altmetrics_sentiment.sentilib.constants import Constants
from altmetrics_sentiment.sentilib.optimizer import StrengthChange
from altmetrics_sentiment.sentilib.summarize import (
    ArticleSentiment,
    CorrelationRow,
    DomainSummary,
)
from altmetrics_sentiment.utils.utils import Utils

ARTICLE_COLUMNS = [
    "altmetric_id",
    "tweet_count",
    "score",
    "label",
    "avg_pos",
    "avg_neg",
    "citation_count",
    "domain_codes",
]
DOMAIN_COLUMNS = [
    "domain",
    "doc_count",
    "avg_pos",
    "avg_neg",
    "mu",
    "sigma",
    "n_positive",
    "n_negative",
    "n_neutral",
]
CORRELATION_COLUMNS = ["threshold", "n", "method", "coefficient"]
OPINION_COLUMNS = ["entity", "aspect", "holder", "time"]
AUDIT_COLUMNS = ["pass", "term", "old_strength", "new_strength", "gain"]
DROP_STATS_COLUMNS = ["reason", "count"]


def drop_stats_frame(
    drop_stats: Mapping[str, int], kept: int, malformed: int = 0
) -> pd.DataFrame:
    rows = [[reason, drop_stats.get(reason, 0)] for reason in Constants.DROP_REASONS]
    rows.append(["malformed", malformed])
    rows.append(["kept", kept])
    return pd.DataFrame(rows, columns=DROP_STATS_COLUMNS)


def article_frame(sents: Iterable[ArticleSentiment]) -> pd.DataFrame:
    rows = [s.to_dict() for s in sorted(sents, key=lambda s: s.altmetric_id)]
    return pd.DataFrame(rows, columns=ARTICLE_COLUMNS)


def domain_frame(summaries: Iterable[DomainSummary]) -> pd.DataFrame:
    return pd.DataFrame([s.to_dict() for s in summaries], columns=DOMAIN_COLUMNS)


def correlation_frame(rows: Iterable[CorrelationRow], method: str) -> pd.DataFrame:
    """
    Correlation rows with the coefficient already formatted, so that an
    undefined bin does not change the column type.
    """
    table = []
    for row in rows:
        coefficient = (
            Constants.REPORT_FLOAT_FORMAT % row.coefficient
            if row.defined
            else Constants.UNDEFINED
        )
        table.append([row.threshold, row.n, method, coefficient])
    return pd.DataFrame(table, columns=CORRELATION_COLUMNS)


def aspect_frame(table: pd.DataFrame, mode: str) -> pd.DataFrame:
    table = table.copy()
    table["mode"] = mode
    return table


def opinion_frame(opinions: Iterable[AspectOpinion]) -> pd.DataFrame:
    return pd.DataFrame([o.to_dict() for o in opinions], columns=OPINION_COLUMNS)


def audit_frame(audit: Iterable[StrengthChange]) -> pd.DataFrame:
    return pd.DataFrame([c.to_dict() for c in audit], columns=AUDIT_COLUMNS)


class ReportWriter:
    """
    Writes report files into one output directory.

    Every file is written atomically, so an interrupted run never leaves a
    half written report behind.
    """

    def __init__(self, output_dir: str):
        """
        :param output_dir: directory the reports go to; created if missing
        :type output_dir: str
        """
        self.output_dir = output_dir
        self.written: List[str] = []
        os.makedirs(output_dir, exist_ok=True)

    def path(self, name: str) -> str:
        return os.path.join(self.output_dir, name)

    def __save(self, name: str, data: str) -> str:
        path = self.path(name)
        Utils.save_to_file(path, data)
        self.written.append(path)
        logging.info(f"Wrote {path}")
        return path

    def write_csv(
        self,
        name: str,
        frame: pd.DataFrame,
        float_format: str = Constants.REPORT_FLOAT_FORMAT,
    ) -> str:
        """
        Write a table as UTF-8 CSV with a header row.

        :param name: file name inside the output directory
        :type name: str
        :param frame: table
        :type frame: pd.DataFrame
        :param float_format: printf style format for float columns
        :type float_format: str

        :return: path written
        :rtype: str
        """
        data = frame.to_csv(index=False, float_format=float_format, lineterminator="\n")
        return self.__save(name, data)

    def write_jsonl(self, name: str, records: Sequence[dict]) -> str:
        data = "".join(
            json.dumps(record, ensure_ascii=False, sort_keys=True) + "\n"
            for record in records
        )
        return self.__save(name, data)

    def write_text(self, name: str, data: str) -> str:
        return self.__save(name, data)
