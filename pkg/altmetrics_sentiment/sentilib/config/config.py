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
import os
import re
from typing import Any, Dict, List, Tuple, Union

import yaml
from atomicwrites import atomic_write

from altmetrics_sentiment import __version__ as sentilib_version
from altmetrics_sentiment.sentilib.constants import Constants
from altmetrics_sentiment.utils.utils import Utils


class ConfigException(Exception):
    """
    An exception class to represent configuration errors.
    """

    pass


class Config:
    """
    A class that represents sentilib configuration.
    """

    LOG_LEVELS = Constants.LOG_LEVELS

    # Mapping of the configuration keys and the corresponding Environment Variable name
    REQUIRED_ATTRS = {
        Constants.TWEETS_FILE: {Constants.ENV_VAR: Constants.SENTILIB_TWEETS_FILE},
        Constants.ARTICLES_FILE: {Constants.ENV_VAR: Constants.SENTILIB_ARTICLES_FILE},
        Constants.CITATIONS_FILE: {
            Constants.ENV_VAR: Constants.SENTILIB_CITATIONS_FILE,
        },
        Constants.DOMAIN_MAPPING_FILE: {
            Constants.ENV_VAR: Constants.SENTILIB_DOMAIN_MAPPING_FILE,
        },
        Constants.STRENGTH_LIST_FILE: {
            Constants.ENV_VAR: Constants.SENTILIB_STRENGTH_LIST_FILE,
        },
        Constants.BOOSTER_FILE: {Constants.ENV_VAR: Constants.SENTILIB_BOOSTER_FILE},
        Constants.INVERTER_FILE: {Constants.ENV_VAR: Constants.SENTILIB_INVERTER_FILE},
        Constants.EMOTICON_FILE: {Constants.ENV_VAR: Constants.SENTILIB_EMOTICON_FILE},
        Constants.CONTRACTION_FILE: {
            Constants.ENV_VAR: Constants.SENTILIB_CONTRACTION_FILE,
        },
        Constants.ASPECT_KEYWORD_FILE: {
            Constants.ENV_VAR: Constants.SENTILIB_ASPECT_KEYWORD_FILE,
        },
        Constants.MIN_TWEETS: {
            Constants.ENV_VAR: Constants.SENTILIB_MIN_TWEETS,
            Constants.DEFAULT: Constants.DEFAULT_MIN_TWEETS,
        },
        Constants.POS_THRESHOLD: {
            Constants.ENV_VAR: Constants.SENTILIB_POS_THRESHOLD,
            Constants.DEFAULT: Constants.DEFAULT_POS_THRESHOLD,
        },
        Constants.NEG_THRESHOLD: {
            Constants.ENV_VAR: Constants.SENTILIB_NEG_THRESHOLD,
            Constants.DEFAULT: Constants.DEFAULT_NEG_THRESHOLD,
        },
        Constants.ENGLISH_THRESHOLD: {
            Constants.ENV_VAR: Constants.SENTILIB_ENGLISH_THRESHOLD,
            Constants.DEFAULT: Constants.DEFAULT_ENGLISH_THRESHOLD,
        },
        Constants.TITLE_MIN_TOKEN_LEN: {
            Constants.ENV_VAR: Constants.SENTILIB_TITLE_MIN_TOKEN_LEN,
            Constants.DEFAULT: Constants.DEFAULT_TITLE_MIN_TOKEN_LEN,
        },
        Constants.ASPECT_MODE: {
            Constants.ENV_VAR: Constants.SENTILIB_ASPECT_MODE,
            Constants.DEFAULT: Constants.DEFAULT_ASPECT_MODE,
        },
        Constants.CORRELATION_BINS: {
            Constants.ENV_VAR: Constants.SENTILIB_CORRELATION_BINS,
            Constants.DEFAULT: Constants.DEFAULT_CORRELATION_BINS,
        },
        Constants.CORRELATION_METHOD: {
            Constants.ENV_VAR: Constants.SENTILIB_CORRELATION_METHOD,
            Constants.DEFAULT: Constants.DEFAULT_CORRELATION_METHOD,
        },
        Constants.MIN_TOTAL_FREQ: {
            Constants.ENV_VAR: Constants.SENTILIB_MIN_TOTAL_FREQ,
            Constants.DEFAULT: Constants.DEFAULT_MIN_TOTAL_FREQ,
        },
        Constants.TOP_K: {
            Constants.ENV_VAR: Constants.SENTILIB_TOP_K,
            Constants.DEFAULT: Constants.DEFAULT_TOP_K,
        },
        Constants.STRENGTH_BAND: {
            Constants.ENV_VAR: Constants.SENTILIB_STRENGTH_BAND,
            Constants.DEFAULT: Constants.DEFAULT_STRENGTH_BAND,
        },
        Constants.OUTPUT_DIR: {
            Constants.ENV_VAR: Constants.SENTILIB_OUTPUT_DIR,
            Constants.DEFAULT: Constants.DEFAULT_OUTPUT_DIR,
        },
        Constants.WORKERS: {
            Constants.ENV_VAR: Constants.SENTILIB_WORKERS,
            Constants.DEFAULT: Constants.DEFAULT_WORKERS,
        },
        Constants.HISTOGRAM_BINS: {
            Constants.ENV_VAR: Constants.SENTILIB_HISTOGRAM_BINS,
            Constants.DEFAULT: Constants.DEFAULT_HISTOGRAM_BINS,
        },
        Constants.LOG_LEVEL: {
            Constants.ENV_VAR: Constants.SENTILIB_LOG_LEVEL,
            Constants.DEFAULT: Constants.DEFAULT_LOG_LEVEL,
        },
        Constants.LOG_FILE: {
            Constants.ENV_VAR: Constants.SENTILIB_LOG_FILE,
            Constants.DEFAULT: Constants.DEFAULT_LOG_FILE,
        },
        Constants.SCORE_TEMPLATE: {
            Constants.ENV_VAR: Constants.SENTILIB_SCORE_TEMPLATE,
            Constants.DEFAULT: Constants.DEFAULT_SCORE_TEMPLATE,
        },
        Constants.SENTILIB_VERSION: {Constants.DEFAULT: sentilib_version},
    }

    REQUIRED_ATTRS_PRETTY_NAMES = {
        Constants.TWEETS_FILE: "Tweet File",
        Constants.ARTICLES_FILE: "Article File",
        Constants.CITATIONS_FILE: "Citation File",
        Constants.DOMAIN_MAPPING_FILE: "Domain Mapping File",
        Constants.STRENGTH_LIST_FILE: "Strength List File",
        Constants.BOOSTER_FILE: "Booster File",
        Constants.INVERTER_FILE: "Inverter File",
        Constants.EMOTICON_FILE: "Emoticon File",
        Constants.CONTRACTION_FILE: "Contraction File",
        Constants.ASPECT_KEYWORD_FILE: "Aspect Keyword File",
        Constants.MIN_TWEETS: "Minimum Tweets per Article",
        Constants.POS_THRESHOLD: "Positive Threshold",
        Constants.NEG_THRESHOLD: "Negative Threshold",
        Constants.ENGLISH_THRESHOLD: "English Threshold",
        Constants.TITLE_MIN_TOKEN_LEN: "Title Token Minimum Length",
        Constants.ASPECT_MODE: "Aspect Mode",
        Constants.CORRELATION_BINS: "Correlation Bins",
        Constants.CORRELATION_METHOD: "Correlation Method",
        Constants.MIN_TOTAL_FREQ: "Minimum Token Frequency",
        Constants.TOP_K: "Exported Terms per Polarity",
        Constants.STRENGTH_BAND: "Strength Band",
        Constants.OUTPUT_DIR: "Output Directory",
        Constants.WORKERS: "Workers",
        Constants.HISTOGRAM_BINS: "Histogram Bins",
        Constants.LOG_LEVEL: "Log Level",
        Constants.LOG_FILE: "Log File",
        Constants.SCORE_TEMPLATE: "Score Template",
        Constants.SENTILIB_VERSION: "Version",
    }

    def __init__(
        self,
        sentilib_rc: str = None,
        output_dir: str = None,
        workers: int = None,
        log_level: str = None,
        log_file: str = None,
        **kwargs,
    ):
        """
        Constructor. Tries to get configuration from:

         - constructor parameters (high priority)
         - sentilib_rc file (middle priority)
         - environment variables (low priority)
         - defaults (if needed and possible)

        Keyword arguments whose value is ``None`` are ignored, so that
        unset command line flags fall through to the file, environment
        and defaults.

        :raises ConfigException: if the configuration file is missing or
            any value violates its constraints
        """
        self.config_file_path = None
        self.is_yaml = False
        self.runtime_config = {}

        if sentilib_rc is None and os.path.exists(Constants.DEFAULT_SENTILIB_RC):
            sentilib_rc = Constants.DEFAULT_SENTILIB_RC

        if sentilib_rc is not None:
            if not os.path.exists(sentilib_rc):
                raise ConfigException(
                    f"Config file does not exist at location: {sentilib_rc}!"
                )
            self.config_file_path = sentilib_rc

        # Load from config file
        self.__load_configuration(file_path=sentilib_rc, **kwargs)

        # Apply any parameters explicitly passed
        if output_dir is not None:
            self.set_output_dir(output_dir=output_dir)

        if workers is not None:
            self.set_workers(workers=workers)

        if log_level is not None:
            self.set_log_level(log_level=log_level)

        if log_file is not None:
            self.set_log_file(log_file=log_file)

        self.required_check(partial=True)
        self.validate()

    def __load_configuration(self, file_path, **kwargs):
        """
        Load the config parameters from config file;
        - Parses key=value/yaml file and loads the parameters in dictionary

        :param file_path: path to the config file; can be key=value or yaml
        :type file_path: str
        :param kwargs: explicit overrides
        :type kwargs: dict
        """
        if file_path and os.path.exists(file_path):
            if Utils.is_yaml_file(file_path=file_path):
                self.__load_yaml_file(file_path=file_path)
                self.is_yaml = True
            else:
                self.__load_sentilib_rc_file(file_path=file_path)

        for k, v in kwargs.items():
            if v is not None:
                self.runtime_config[k] = v

    def __load_yaml_file(self, file_path):
        """
        Load the config from yml file
        :param file_path: path to the config file
        :type file_path: str

        :return True or False indicating success/failure for loading the config file
        :rtype bool
        """
        try:
            with open(file_path, "r", encoding="utf-8") as file:
                config = yaml.safe_load(file)
                if (
                    isinstance(config, dict)
                    and config.get(Constants.RUNTIME_SECTION) is not None
                ):
                    for key, value in config.get(Constants.RUNTIME_SECTION).items():
                        if value is None:
                            continue
                        if isinstance(value, str):
                            value = value.strip().strip("'").strip('"')
                        elif isinstance(value, list):
                            value = ",".join(str(v) for v in value)
                        self.__set_loaded(key, value, file_path)
                    self.runtime_config[Constants.SENTILIB_VERSION] = sentilib_version
                    return True
                return False
        except yaml.YAMLError:
            return False

    def __load_sentilib_rc_file(self, file_path):
        """
        Load the config from a flat key=value file.

        Lines may carry an ``export`` prefix and ``SENTILIB_`` key names,
        so that the same file can be sourced from a shell.

        :param file_path: path to the config file
        :type file_path: str

        :return True or False indicating success/failure for loading the config file
        :rtype bool
        """
        ret_val = False
        with open(file_path, "r", encoding="utf-8") as file:
            lines = file.readlines()

        pattern = re.compile(r"^(?:export\s+)?([^=\s]+)\s*=(.*)$", re.IGNORECASE)

        for line in lines:
            stripped = line.strip()
            if not stripped or stripped.startswith("#"):
                continue
            match = pattern.match(stripped)
            if not match:
                logging.warning(
                    f"Ignoring malformed config line in {file_path}: {line}"
                )
                continue
            key, value = match.groups()
            value = value.strip()
            value = value.strip('"')
            value = value.strip("'")
            key = key.lower()
            if key.startswith("sentilib_") and key != Constants.SENTILIB_VERSION:
                key = key[len("sentilib_") :]
            self.__set_loaded(key, value, file_path)
            ret_val = True
        self.runtime_config[Constants.SENTILIB_VERSION] = sentilib_version
        return ret_val

    def __set_loaded(self, key: str, value: Any, file_path: str):
        if key not in self.REQUIRED_ATTRS:
            logging.warning(f"Unknown config key '{key}' in {file_path}")
        self.runtime_config[key] = value

    def required_check(self, partial: bool = False):
        """
        Fill keys the config file left unset from SENTILIB_* variables, then
        from defaults.

        :param partial: skip keys that have neither a value nor a default
        :raises ConfigException: if a key without a default is still unset
        """
        errors = []

        for attr, attr_props in self.REQUIRED_ATTRS.items():
            if attr not in self.runtime_config or self.runtime_config.get(attr) is None:
                # Environment
                if (
                    attr_props.get(Constants.ENV_VAR)
                    and os.environ.get(attr_props.get(Constants.ENV_VAR)) is not None
                ):
                    self.runtime_config[attr] = os.environ.get(
                        attr_props.get(Constants.ENV_VAR)
                    )
                # Defaults
                elif attr_props.get(Constants.DEFAULT) is not None:
                    self.runtime_config[attr] = attr_props.get(Constants.DEFAULT)
                # No default; tolerated on a partial check
                elif attr_props.get(Constants.DEFAULT) is None and partial:
                    continue
                else:
                    errors.append(f"{attr} is not set")

        if errors:
            logging.error(f"Failing Config: {self.runtime_config}")
            raise ConfigException(
                f"Error initializing {self.__class__.__name__}: {errors}"
            )

    def require(self, *attrs: str):
        """
        Ensure that the given (optional by default) keys are set.

        Subcommands call this for the input files they need.

        :raises ConfigException: naming every missing key
        """
        missing = [attr for attr in attrs if not self.runtime_config.get(attr)]
        if missing:
            raise ConfigException(f"Missing required configuration: {missing}")

    def validate(self):
        """
        Check every configured value against its constraints.

        :raises ConfigException: naming each offending field
        """
        errors = []

        def check(field: str, fn):
            try:
                problem = fn()
            except ConfigException as e:
                errors.append(str(e))
                return
            if problem:
                errors.append(f"{field}: {problem}")

        check(
            Constants.MIN_TWEETS,
            lambda: "must be >= 1" if self.get_min_tweets() < 1 else None,
        )
        check(
            Constants.POS_THRESHOLD,
            lambda: (
                "thresholds must satisfy 0 <= neg_threshold < pos_threshold <= 1"
                if not (
                    0.0 <= self.get_neg_threshold() < self.get_pos_threshold() <= 1.0
                )
                else None
            ),
        )
        check(
            Constants.ENGLISH_THRESHOLD,
            lambda: (
                "must be within [0, 1]"
                if not 0.0 <= self.get_english_threshold() <= 1.0
                else None
            ),
        )
        check(
            Constants.TITLE_MIN_TOKEN_LEN,
            lambda: "must be >= 1" if self.get_title_min_token_len() < 1 else None,
        )
        check(
            Constants.ASPECT_MODE,
            lambda: (
                f"must be one of {Constants.ASPECT_MODES}"
                if self.get_aspect_mode() not in Constants.ASPECT_MODES
                else None
            ),
        )
        check(Constants.CORRELATION_BINS, self.__check_bins)
        check(
            Constants.CORRELATION_METHOD,
            lambda: (
                f"must be one of {Constants.CORRELATION_METHODS}"
                if self.get_correlation_method() not in Constants.CORRELATION_METHODS
                else None
            ),
        )
        check(
            Constants.MIN_TOTAL_FREQ,
            lambda: "must be >= 1" if self.get_min_total_freq() < 1 else None,
        )
        check(Constants.TOP_K, lambda: "must be >= 1" if self.get_top_k() < 1 else None)
        check(Constants.STRENGTH_BAND, self.__check_band)
        check(
            Constants.WORKERS,
            lambda: "must be >= 1" if self.get_workers() < 1 else None,
        )
        check(
            Constants.HISTOGRAM_BINS,
            lambda: "must be >= 1" if self.get_histogram_bins() < 1 else None,
        )
        check(
            Constants.LOG_LEVEL,
            lambda: (
                f"must be one of {list(self.LOG_LEVELS)}"
                if str(self.get_log_level()).upper() not in self.LOG_LEVELS
                else None
            ),
        )

        if errors:
            raise ConfigException("Invalid configuration: " + "; ".join(errors))

    def __check_bins(self):
        bins = self.get_correlation_bins()
        if not bins:
            return "at least one threshold is required"
        if any(not 0.0 < b < 1.0 for b in bins):
            return "thresholds must lie in (0, 1)"
        if any(a <= b for a, b in zip(bins, bins[1:])):
            return "thresholds must be strictly descending"
        return None

    def __check_band(self):
        low, high = self.get_strength_band()
        if not Constants.MIN_STRENGTH <= low <= high <= Constants.MAX_STRENGTH:
            return (
                f"band must satisfy {Constants.MIN_STRENGTH} <= min <= max "
                f"<= {Constants.MAX_STRENGTH}"
            )
        return None

    def __get_typed(self, key: str, cast):
        value = self.runtime_config.get(key)
        try:
            return cast(value)
        except (TypeError, ValueError):
            raise ConfigException(f"{key}: cannot interpret {value!r}")

    def __get_float_list(self, key: str) -> List[float]:
        value = self.runtime_config.get(key)
        if isinstance(value, (list, tuple)):
            items = value
        else:
            items = [v for v in str(value).split(",") if v.strip()]
        try:
            return [float(v) for v in items]
        except (TypeError, ValueError):
            raise ConfigException(f"{key}: cannot interpret {value!r}")

    def get_config(self) -> Dict[str, str]:
        """
        Gets a dictionary mapping keywords to configured sentilib values.

        :return: dictionary mapping keywords to values
        :rtype: Dict[String, String]
        """
        return self.runtime_config

    def get_config_pretty_names_dict(self) -> Dict[str, str]:
        """
        Return PRETTY Names for the config

        :return: Dict of Pretty Names
        :rtype: Dict[str, str]
        """
        return self.REQUIRED_ATTRS_PRETTY_NAMES

    def get(self, key: str) -> Union[str, None]:
        """
        Gets a raw configured value, or ``None``.
        """
        value = self.runtime_config.get(key)
        if value == "":
            return None
        return value

    def set(self, key: str, value: Any):
        """
        Sets a raw configured value.
        """
        self.runtime_config[key] = value

    def get_min_tweets(self) -> int:
        return self.__get_typed(Constants.MIN_TWEETS, int)

    def get_pos_threshold(self) -> float:
        return self.__get_typed(Constants.POS_THRESHOLD, float)

    def get_neg_threshold(self) -> float:
        return self.__get_typed(Constants.NEG_THRESHOLD, float)

    def get_english_threshold(self) -> float:
        return self.__get_typed(Constants.ENGLISH_THRESHOLD, float)

    def get_title_min_token_len(self) -> int:
        return self.__get_typed(Constants.TITLE_MIN_TOKEN_LEN, int)

    def get_aspect_mode(self) -> str:
        return str(self.runtime_config.get(Constants.ASPECT_MODE))

    def get_correlation_bins(self) -> List[float]:
        """
        Gets the citation-correlation score thresholds, in descending order.

        :return: thresholds
        :rtype: List[float]
        """
        return self.__get_float_list(Constants.CORRELATION_BINS)

    def get_correlation_method(self) -> str:
        return str(self.runtime_config.get(Constants.CORRELATION_METHOD)).lower()

    def get_min_total_freq(self) -> int:
        return self.__get_typed(Constants.MIN_TOTAL_FREQ, int)

    def get_top_k(self) -> int:
        return self.__get_typed(Constants.TOP_K, int)

    def get_strength_band(self) -> Tuple[int, int]:
        """
        Gets the (min, max) strength magnitudes used when exporting a
        generated lexicon.

        :return: strength band
        :rtype: Tuple[int, int]
        """
        band = self.__get_float_list(Constants.STRENGTH_BAND)
        if len(band) != 2 or any(b != int(b) for b in band):
            raise ConfigException(
                f"{Constants.STRENGTH_BAND}: expected two integers 'min,max'"
            )
        return int(band[0]), int(band[1])

    def get_histogram_bins(self) -> int:
        return self.__get_typed(Constants.HISTOGRAM_BINS, int)

    def get_workers(self) -> int:
        """
        Gets the worker count. It never changes any output.

        :return: worker count
        :rtype: int
        """
        return self.__get_typed(Constants.WORKERS, int)

    def set_workers(self, workers: int):
        """
        Sets the worker count.

        :param workers: thread pool size
        :type workers: int
        """
        self.runtime_config[Constants.WORKERS] = workers

    def get_output_dir(self) -> str:
        """
        Gets the output directory

        :return output_dir: output directory
        :rtype output_dir: string
        """
        return self.runtime_config.get(Constants.OUTPUT_DIR)

    def set_output_dir(self, output_dir: str):
        """
        Sets the output directory

        :param output_dir: output directory
        :type output_dir: string
        """
        self.runtime_config[Constants.OUTPUT_DIR] = output_dir

    def get_score_template(self) -> str:
        return self.runtime_config.get(Constants.SCORE_TEMPLATE)

    def set_log_level(self, log_level: str = "INFO"):
        """
        Sets the current log level for logging

        Options:  'DEBUG'
                  'INFO'
                  'WARNING'
                  'ERROR'
                  'CRITICAL'

        :param log_level: new log level
        :type str: Level
        """

        self.runtime_config[Constants.LOG_LEVEL] = log_level

    def get_log_level(self):
        """
        Get the current log level for logging

        :return log_level: new log level
        :rtype log_level: string
        """

        return self.runtime_config.get(Constants.LOG_LEVEL)

    def get_log_file(self) -> str:
        """
        Gets the current log file for logging

        :return log_file: log file; empty means stderr
        :rtype log_file: string
        """

        return self.runtime_config.get(Constants.LOG_FILE)

    def set_log_file(self, log_file: str):
        """
        Sets the current log file for logging

        :param log_file: log file
        :type log_file: string
        """
        self.runtime_config[Constants.LOG_FILE] = log_file

    def save_config(self, path: str = None):
        """
        Write the configuration file.

        :param path: write here instead of the file the configuration was
            loaded from; YAML when the name ends in ``.yml`` or ``.yaml``
        :type path: str
        """
        if path is not None:
            self.config_file_path = path
            self.is_yaml = path.lower().endswith((".yml", ".yaml"))

        if self.config_file_path is None:
            logging.warning("Config file path not set!")
            return

        if self.is_yaml:
            # Write the dictionary to the YAML file
            with atomic_write(self.config_file_path, overwrite=True) as f:
                yaml.dump(
                    {Constants.RUNTIME_SECTION: self.runtime_config},
                    f,
                    default_flow_style=False,
                )
        else:
            with atomic_write(self.config_file_path, overwrite=True) as f:
                for attr in self.REQUIRED_ATTRS:
                    value = self.runtime_config.get(attr)
                    if value is None:
                        continue
                    f.write(f"{attr}={value}\n")

    def setup_logging(self):
        """
        Create log file if it doesn't exist; setup logger
        """
        try:
            for handler in logging.root.handlers[:]:
                logging.root.removeHandler(handler)
        except Exception as e:
            print(f"Exception from removeHandler: {e}")
            pass

        log_file = self.get_log_file()
        try:
            if log_file and not os.path.isdir(os.path.dirname(log_file) or "."):
                os.makedirs(os.path.dirname(log_file))
        except Exception:
            logging.warning(
                f"Failed to create log_file directory: {os.path.dirname(log_file)}"
            )

        level = self.LOG_LEVELS[str(self.get_log_level()).upper()]
        if log_file:
            logging.basicConfig(
                filename=log_file,
                level=level,
                format=Constants.LOG_FORMAT,
                datefmt=Constants.LOG_DATE_FORMAT,
            )
        else:
            logging.basicConfig(
                level=level,
                format=Constants.LOG_FORMAT,
                datefmt=Constants.LOG_DATE_FORMAT,
            )
