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
Command line front end: ``sentilib preprocess|lexgen|analyze|score|config``.

Exit codes: 0 on success, 1 for usage and configuration errors, 2 for
input errors.
"""
import argparse
import logging
import sys
from typing import List

from altmetrics_sentiment import __version__
from altmetrics_sentiment.sentilib.aspects import AspectException
from altmetrics_sentiment.sentilib.config.config import ConfigException
from altmetrics_sentiment.sentilib.constants import Constants
from altmetrics_sentiment.sentilib.corpus import (
    CitationSourceException,
    CorpusException,
)
from altmetrics_sentiment.sentilib.lexgen import VIEW_POSITIVE, LexgenException
from altmetrics_sentiment.sentilib.optimizer import OptimizerException
from altmetrics_sentiment.sentilib.sentilib import SentilibManager
from altmetrics_sentiment.sentilib.strength import LexiconException
from altmetrics_sentiment.sentilib.summarize import SummarizeException

INPUT_ERRORS = (
    AspectException,
    CitationSourceException,
    CorpusException,
    LexiconException,
    LexgenException,
    OptimizerException,
    SummarizeException,
    OSError,
)

# Options handled by the manager constructor rather than as config keys.
MANAGER_OPTIONS = ["command", "config", "output_dir", "workers", "log_level"]
MANAGER_OPTIONS += ["log_file", "output", "text", "optimize", "min_gain", "max_passes"]
MANAGER_OPTIONS += ["save"]


class SentilibArgumentParser(argparse.ArgumentParser):
    """
    Argument parser that reports usage errors with exit code 1.
    """

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(Constants.EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _lexicon_options() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(add_help=False)
    group = parser.add_argument_group("lexicon")
    group.add_argument(
        "--strength-list", dest=Constants.STRENGTH_LIST_FILE, metavar="PATH"
    )
    group.add_argument("--boosters", dest=Constants.BOOSTER_FILE, metavar="PATH")
    group.add_argument("--inverters", dest=Constants.INVERTER_FILE, metavar="PATH")
    group.add_argument("--emoticons", dest=Constants.EMOTICON_FILE, metavar="PATH")
    return parser


def _cleaning_options() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(add_help=False)
    group = parser.add_argument_group("cleaning")
    group.add_argument("--tweets", dest=Constants.TWEETS_FILE, metavar="PATH")
    group.add_argument(
        "--contractions", dest=Constants.CONTRACTION_FILE, metavar="PATH"
    )
    group.add_argument(
        "--english-threshold", dest=Constants.ENGLISH_THRESHOLD, type=float
    )
    group.add_argument(
        "--title-min-token-len", dest=Constants.TITLE_MIN_TOKEN_LEN, type=int
    )
    return parser


def build_parser() -> argparse.ArgumentParser:
    parser = SentilibArgumentParser(
        prog="sentilib", description="Sentiment of tweets about scholarly articles."
    )
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument("--config", metavar="PATH", help="sentilib_rc file")
    parser.add_argument("--output-dir", metavar="DIR")
    parser.add_argument("--workers", type=int)
    parser.add_argument("--log-level", choices=list(Constants.LOG_LEVELS))
    parser.add_argument("--log-file", metavar="PATH")
    parser.add_argument(
        "--output", choices=["text", "json", "list", "pandas"], default="text"
    )

    sub = parser.add_subparsers(dest="command", required=True)
    lexicon = _lexicon_options()
    cleaning = _cleaning_options()

    p = sub.add_parser(
        "preprocess", parents=[cleaning], help="clean a tweet file"
    )
    p.add_argument("--articles", dest=Constants.ARTICLES_FILE, metavar="PATH")
    p.add_argument(
        "--domain-mapping", dest=Constants.DOMAIN_MAPPING_FILE, metavar="PATH"
    )

    p = sub.add_parser(
        "lexgen",
        parents=[cleaning, lexicon],
        help="generate a lexicon from labelled or lexicon-labelled tweets",
    )
    p.add_argument("--min-total-freq", dest=Constants.MIN_TOTAL_FREQ, type=int)
    p.add_argument("--top-k", dest=Constants.TOP_K, type=int)
    p.add_argument("--strength-band", dest=Constants.STRENGTH_BAND, metavar="LOW,HIGH")
    p.add_argument(
        "--optimize", action="store_true", help="tune strengths on gold labels"
    )
    p.add_argument("--min-gain", type=int, default=Constants.DEFAULT_MIN_GAIN)
    p.add_argument("--max-passes", type=int, default=Constants.DEFAULT_MAX_PASSES)

    p = sub.add_parser(
        "analyze", parents=[cleaning, lexicon], help="article level reports"
    )
    p.add_argument("--articles", dest=Constants.ARTICLES_FILE, metavar="PATH")
    p.add_argument("--citations", dest=Constants.CITATIONS_FILE, metavar="PATH")
    p.add_argument(
        "--domain-mapping", dest=Constants.DOMAIN_MAPPING_FILE, metavar="PATH"
    )
    p.add_argument(
        "--aspect-keywords", dest=Constants.ASPECT_KEYWORD_FILE, metavar="PATH"
    )
    p.add_argument("--min-tweets", dest=Constants.MIN_TWEETS, type=int)
    p.add_argument("--pos-threshold", dest=Constants.POS_THRESHOLD, type=float)
    p.add_argument("--neg-threshold", dest=Constants.NEG_THRESHOLD, type=float)
    p.add_argument(
        "--aspect-mode", dest=Constants.ASPECT_MODE, choices=Constants.ASPECT_MODES
    )
    p.add_argument(
        "--correlation-bins", dest=Constants.CORRELATION_BINS, metavar="T1,T2,..."
    )
    p.add_argument(
        "--correlation-method",
        dest=Constants.CORRELATION_METHOD,
        choices=Constants.CORRELATION_METHODS,
    )
    p.add_argument("--histogram-bins", dest=Constants.HISTOGRAM_BINS, type=int)

    p = sub.add_parser("score", parents=[lexicon], help="score one text")
    p.add_argument("text")
    p.add_argument(
        "--score-template", dest=Constants.SCORE_TEMPLATE, metavar="TEMPLATE"
    )

    p = sub.add_parser("config", help="show the effective configuration")
    p.add_argument(
        "--save", metavar="PATH", help="also write it as a sentilib_rc file"
    )
    return parser


def run(manager: SentilibManager, args: argparse.Namespace):
    if args.command == "preprocess":
        result = manager.preprocess()
        stats = [{"reason": k, "count": v} for k, v in result.drop_stats.items()]
        stats.append({"reason": "kept", "count": len(result.kept())})
        manager.list_table(stats, output=args.output)
    elif args.command == "lexgen":
        table, tuning = manager.lexgen(
            optimize=args.optimize, min_gain=args.min_gain, max_passes=args.max_passes
        )
        top = table.top(10, VIEW_POSITIVE).to_dict("records")
        manager.list_table(top, output=args.output)
        if tuning is not None:
            manager.show_table(tuning.to_dict(), output=args.output)
    elif args.command == "analyze":
        _, summaries = manager.analyze()
        manager.list_table([s.to_dict() for s in summaries], output=args.output)
    elif args.command == "score":
        _, _, line = manager.score(args.text)
        print(line)
    elif args.command == "config":
        if args.save:
            manager.save_config(args.save)
        manager.show_config(output=args.output)


def main(argv: List[str] = None) -> int:
    """
    Run the command line.

    :param argv: arguments, ``sys.argv[1:]`` when ``None``
    :type argv: List[str]

    :return: exit code
    :rtype: int
    """
    args = build_parser().parse_args(argv)
    overrides = {
        k: v
        for k, v in vars(args).items()
        if k not in MANAGER_OPTIONS and v is not None
    }

    try:
        manager = SentilibManager(
            sentilib_rc=args.config,
            output_dir=args.output_dir,
            workers=args.workers,
            log_level=args.log_level,
            log_file=args.log_file,
            output=args.output,
            **overrides,
        )
    except ConfigException as e:
        print(f"sentilib: configuration error: {e}", file=sys.stderr)
        return Constants.EXIT_USAGE

    with manager:
        try:
            run(manager, args)
        except ConfigException as e:
            logging.error(f"Configuration error: {e}")
            return Constants.EXIT_USAGE
        except INPUT_ERRORS as e:
            logging.error(f"Input error: {e}")
            return Constants.EXIT_INPUT
    return Constants.EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
