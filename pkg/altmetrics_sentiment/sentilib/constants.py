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
import logging


class Constants:
    DEFAULT_LOG_LEVEL = "INFO"
    DEFAULT_LOG_FILE = ""
    DEFAULT_OUTPUT_DIR = "sentilib_output"
    DEFAULT_SENTILIB_RC = "sentilib_rc"

    DEFAULT_MIN_TWEETS = 30
    DEFAULT_POS_THRESHOLD = 0.7
    DEFAULT_NEG_THRESHOLD = 0.3
    DEFAULT_ENGLISH_THRESHOLD = 0.15
    DEFAULT_TITLE_MIN_TOKEN_LEN = 4
    DEFAULT_ASPECT_MODE = "double_count"
    DEFAULT_CORRELATION_BINS = "0.85,0.8,0.75"
    DEFAULT_CORRELATION_METHOD = "spearman"
    DEFAULT_MIN_TOTAL_FREQ = 1
    DEFAULT_TOP_K = 50
    DEFAULT_STRENGTH_BAND = "2,5"
    DEFAULT_WORKERS = 1
    DEFAULT_HISTOGRAM_BINS = 10
    DEFAULT_MIN_GAIN = 2
    DEFAULT_MAX_PASSES = 20
    DEFAULT_SCORE_TEMPLATE = (
        "positive={{ positive }} negative={{ negative }} label={{ label }}"
    )

    SENTILIB_TWEETS_FILE = "SENTILIB_TWEETS_FILE"
    SENTILIB_ARTICLES_FILE = "SENTILIB_ARTICLES_FILE"
    SENTILIB_CITATIONS_FILE = "SENTILIB_CITATIONS_FILE"
    SENTILIB_DOMAIN_MAPPING_FILE = "SENTILIB_DOMAIN_MAPPING_FILE"
    SENTILIB_STRENGTH_LIST_FILE = "SENTILIB_STRENGTH_LIST_FILE"
    SENTILIB_BOOSTER_FILE = "SENTILIB_BOOSTER_FILE"
    SENTILIB_INVERTER_FILE = "SENTILIB_INVERTER_FILE"
    SENTILIB_EMOTICON_FILE = "SENTILIB_EMOTICON_FILE"
    SENTILIB_CONTRACTION_FILE = "SENTILIB_CONTRACTION_FILE"
    SENTILIB_ASPECT_KEYWORD_FILE = "SENTILIB_ASPECT_KEYWORD_FILE"
    SENTILIB_MIN_TWEETS = "SENTILIB_MIN_TWEETS"
    SENTILIB_POS_THRESHOLD = "SENTILIB_POS_THRESHOLD"
    SENTILIB_NEG_THRESHOLD = "SENTILIB_NEG_THRESHOLD"
    SENTILIB_ENGLISH_THRESHOLD = "SENTILIB_ENGLISH_THRESHOLD"
    SENTILIB_TITLE_MIN_TOKEN_LEN = "SENTILIB_TITLE_MIN_TOKEN_LEN"
    SENTILIB_ASPECT_MODE = "SENTILIB_ASPECT_MODE"
    SENTILIB_CORRELATION_BINS = "SENTILIB_CORRELATION_BINS"
    SENTILIB_CORRELATION_METHOD = "SENTILIB_CORRELATION_METHOD"
    SENTILIB_MIN_TOTAL_FREQ = "SENTILIB_MIN_TOTAL_FREQ"
    SENTILIB_TOP_K = "SENTILIB_TOP_K"
    SENTILIB_STRENGTH_BAND = "SENTILIB_STRENGTH_BAND"
    SENTILIB_OUTPUT_DIR = "SENTILIB_OUTPUT_DIR"
    SENTILIB_WORKERS = "SENTILIB_WORKERS"
    SENTILIB_HISTOGRAM_BINS = "SENTILIB_HISTOGRAM_BINS"
    SENTILIB_LOG_LEVEL = "SENTILIB_LOG_LEVEL"
    SENTILIB_LOG_FILE = "SENTILIB_LOG_FILE"
    SENTILIB_SCORE_TEMPLATE = "SENTILIB_SCORE_TEMPLATE"
    SENTILIB_VERSION = "sentilib_version"

    LOG_LEVELS = {
        "DEBUG": logging.DEBUG,
        "INFO": logging.INFO,
        "WARNING": logging.WARNING,
        "ERROR": logging.ERROR,
        "CRITICAL": logging.CRITICAL,
    }
    LOG_FORMAT = (
        "[%(asctime)s] {%(pathname)s:%(lineno)d} %(levelname)s - %(message)s"
    )
    LOG_DATE_FORMAT = "%H:%M:%S"

    RUNTIME_SECTION = "runtime"

    TWEETS_FILE = "tweets_file"
    ARTICLES_FILE = "articles_file"
    CITATIONS_FILE = "citations_file"
    DOMAIN_MAPPING_FILE = "domain_mapping_file"
    STRENGTH_LIST_FILE = "strength_list_file"
    BOOSTER_FILE = "booster_file"
    INVERTER_FILE = "inverter_file"
    EMOTICON_FILE = "emoticon_file"
    CONTRACTION_FILE = "contraction_file"
    ASPECT_KEYWORD_FILE = "aspect_keyword_file"
    MIN_TWEETS = "min_tweets"
    POS_THRESHOLD = "pos_threshold"
    NEG_THRESHOLD = "neg_threshold"
    ENGLISH_THRESHOLD = "english_threshold"
    TITLE_MIN_TOKEN_LEN = "title_min_token_len"
    ASPECT_MODE = "aspect_mode"
    CORRELATION_BINS = "correlation_bins"
    CORRELATION_METHOD = "correlation_method"
    MIN_TOTAL_FREQ = "min_total_freq"
    TOP_K = "top_k"
    STRENGTH_BAND = "strength_band"
    OUTPUT_DIR = "output_dir"
    WORKERS = "workers"
    HISTOGRAM_BINS = "histogram_bins"
    LOG_LEVEL = "log_level"
    LOG_FILE = "log_file"
    SCORE_TEMPLATE = "score_template"

    ENV_VAR = "env_var"
    DEFAULT = "default"

    # Trinary labels
    POSITIVE = "positive"
    NEGATIVE = "negative"
    NEUTRAL = "neutral"

    # Drop reasons
    DROP_NON_ENGLISH = "non-english"
    DROP_DUPLICATE = "duplicate"
    DROP_EMPTY = "empty"
    DROP_REASONS = [DROP_NON_ENGLISH, DROP_DUPLICATE, DROP_EMPTY]

    # Aspect buckets, in Table 2 order
    ASPECT_TITLE = "title"
    ASPECT_ABSTRACT = "abstract"
    ASPECT_METHODOLOGY = "methodology"
    ASPECT_RESULTS = "results_conclusion"
    ASPECT_OTHER = "other"
    ASPECTS = [ASPECT_TITLE, ASPECT_ABSTRACT, ASPECT_METHODOLOGY, ASPECT_RESULTS]
    ASPECT_BUCKETS = ASPECTS + [ASPECT_OTHER]

    ASPECT_MODE_DOUBLE_COUNT = "double_count"
    ASPECT_MODE_EXCLUSIVE = "exclusive"
    ASPECT_MODES = [ASPECT_MODE_DOUBLE_COUNT, ASPECT_MODE_EXCLUSIVE]

    CORRELATION_SPEARMAN = "spearman"
    CORRELATION_PEARSON = "pearson"
    CORRELATION_METHODS = [CORRELATION_SPEARMAN, CORRELATION_PEARSON]

    MIN_STRENGTH = 2
    MAX_STRENGTH = 5

    # The 16 merged disciplines
    DISCIPLINES = [
        "Agricultural, Biological Sciences & Veterinary",
        "Biochemistry, Genetics & Molecular Biology",
        "Chemistry",
        "Computer Science",
        "Earth & Planetary Sciences",
        "Engineering",
        "Environmental Science",
        "Economics, Business & Decision Sciences",
        "General",
        "Materials Science",
        "Health Professions & Nursing",
        "Mathematics",
        "Medicine",
        "Physics & Astronomy",
        "Social Sciences",
        "Other Life & Health Sciences",
    ]

    DISCIPLINE_ALIASES = {
        "Agricultural, Biological Science & Veterinary": (
            "Agricultural, Biological Sciences & Veterinary"
        ),
        "Earth Planetary Sciences": "Earth & Planetary Sciences",
        "Environmental Sciences": "Environmental Science",
        "Material Science": "Materials Science",
        "Materials Sciences": "Materials Science",
        "Medicine & Medical Sciences": "Medicine",
        "Computer Sciences": "Computer Science",
    }

    # Report files
    CLEANED_TWEETS_FILE = "cleaned_tweets.jsonl"
    DROP_STATS_FILE = "drop_stats.csv"
    LEXICON_TABLE_FILE = "lexicon_table.csv"
    APPENDIX_POSITIVE_FILE = "appendix_positive.csv"
    APPENDIX_NEGATIVE_FILE = "appendix_negative.csv"
    TOKEN_SCATTER_FILE = "token_scatter.csv"
    STRENGTH_EXPORT_FILE = "strength_list.tsv"
    OPTIMIZED_STRENGTH_FILE = "strength_list_optimized.tsv"
    OPTIMIZER_AUDIT_FILE = "optimizer_audit.csv"
    ARTICLE_SENTIMENT_FILE = "article_sentiment.csv"
    DOMAIN_SUMMARY_FILE = "domain_summary.csv"
    DISTRIBUTION_FILE = "sentiment_distribution.csv"
    ARTICLE_DISTRIBUTION_FILE = "article_label_distribution.csv"
    NORMAL_FIT_FILE = "normal_fit.csv"
    HISTOGRAM_FILE = "score_histogram.csv"
    DOMAIN_SCATTER_FILE = "domain_scatter.csv"
    CORRELATION_FILE = "citation_correlation.csv"
    ASPECT_SUMMARY_FILE = "aspect_summary.csv"
    ASPECT_OPINIONS_FILE = "aspect_opinions.csv"

    # Bundled resources
    STRENGTH_LIST_RESOURCE = "strength_list.tsv"
    BOOSTER_RESOURCE = "boosters.tsv"
    INVERTER_RESOURCE = "inverters.txt"
    EMOTICON_RESOURCE = "emoticons.tsv"
    CONTRACTION_RESOURCE = "contractions.tsv"
    ASPECT_KEYWORD_RESOURCE = "aspect_keywords.tsv"

    REPORT_FLOAT_FORMAT = "%.6f"
    LEXICON_FLOAT_FORMAT = "%.12f"
    UNDEFINED = "undefined"

    # Exit codes
    EXIT_OK = 0
    EXIT_USAGE = 1
    EXIT_INPUT = 2
