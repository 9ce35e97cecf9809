import logging
import os
import pathlib
import shutil
import tempfile
import unittest
from unittest import mock

import yaml

from altmetrics_sentiment.sentilib.config.config import Config, ConfigException
from altmetrics_sentiment.sentilib.constants import Constants


class ConfigTests(unittest.TestCase):
    """
    Tests for configuration loading and validation.
    """

    DATA_DIR = pathlib.Path(__file__).parent / "data"

    def setUp(self):
        env = {k: v for k, v in os.environ.items() if not k.startswith("SENTILIB_")}
        patcher = mock.patch.dict(os.environ, env, clear=True)
        patcher.start()
        self.addCleanup(patcher.stop)

        # A sentilib_rc in the working directory would be picked up.
        self.tmp = tempfile.mkdtemp()
        self.addCleanup(shutil.rmtree, self.tmp)
        cwd = os.getcwd()
        os.chdir(self.tmp)
        self.addCleanup(os.chdir, cwd)

    def copy(self, name: str) -> str:
        return shutil.copy(self.DATA_DIR / name, os.path.join(self.tmp, name))

    def test_defaults(self):
        config = Config()
        self.assertIsNone(config.config_file_path)
        self.assertEqual(config.get_min_tweets(), Constants.DEFAULT_MIN_TWEETS)
        self.assertEqual(config.get_correlation_bins(), [0.85, 0.8, 0.75])
        self.assertEqual(config.get_aspect_mode(), Constants.ASPECT_MODE_DOUBLE_COUNT)
        self.assertEqual(config.get_strength_band(), (2, 5))
        self.assertEqual(config.get_workers(), 1)
        self.assertIsNone(config.get(Constants.TWEETS_FILE))

    def test_flat_file(self):
        config = Config(sentilib_rc=str(self.DATA_DIR / "sentilib_rc"))
        self.assertFalse(config.is_yaml)
        self.assertEqual(config.get_min_tweets(), 10)
        self.assertEqual(config.get_pos_threshold(), 0.65)
        self.assertEqual(config.get_neg_threshold(), 0.35)
        self.assertEqual(config.get_aspect_mode(), Constants.ASPECT_MODE_EXCLUSIVE)
        self.assertEqual(config.get_correlation_bins(), [0.9, 0.6])

    def test_yaml_file(self):
        config = Config(sentilib_rc=str(self.DATA_DIR / "sentilib_rc.yml"))
        self.assertTrue(config.is_yaml)
        self.assertEqual(config.get_min_tweets(), 12)
        self.assertEqual(config.get_correlation_bins(), [0.8, 0.5])
        self.assertEqual(config.get_aspect_mode(), Constants.ASPECT_MODE_DOUBLE_COUNT)

    def test_default_file_in_working_directory(self):
        shutil.copy(self.DATA_DIR / "sentilib_rc", Constants.DEFAULT_SENTILIB_RC)
        config = Config()
        self.assertEqual(config.config_file_path, Constants.DEFAULT_SENTILIB_RC)
        self.assertEqual(config.get_min_tweets(), 10)

    def test_precedence(self):
        os.environ[Constants.SENTILIB_MIN_TWEETS] = "40"
        os.environ[Constants.SENTILIB_TOP_K] = "7"
        self.assertEqual(Config().get_min_tweets(), 40)

        rc = str(self.DATA_DIR / "sentilib_rc")
        config = Config(sentilib_rc=rc)
        self.assertEqual(config.get_min_tweets(), 10)
        self.assertEqual(config.get_top_k(), 7)

        config = Config(sentilib_rc=rc, min_tweets=5, top_k=None, workers=3)
        self.assertEqual(config.get_min_tweets(), 5)
        self.assertEqual(config.get_top_k(), 7)
        self.assertEqual(config.get_workers(), 3)

    def test_missing_file(self):
        self.assertRaises(
            ConfigException, Config, sentilib_rc=os.path.join(self.tmp, "nope")
        )

    def test_validation(self):
        invalid = [
            {"pos_threshold": 0.2, "neg_threshold": 0.5},
            {"pos_threshold": 1.5},
            {"min_tweets": 0},
            {"min_tweets": "many"},
            {"english_threshold": -0.1},
            {"correlation_bins": "0.5,0.8"},
            {"correlation_bins": "0.9,1.0"},
            {"correlation_method": "kendall"},
            {"aspect_mode": "fuzzy"},
            {"strength_band": "1,2,3"},
            {"strength_band": "4,2"},
            {"workers": 0},
            {"log_level": "LOUD"},
        ]
        for kwargs in invalid:
            with self.subTest(kwargs=kwargs):
                self.assertRaises(ConfigException, Config, **kwargs)

    def test_validation_names_every_field(self):
        with self.assertRaises(ConfigException) as cm:
            Config(min_tweets=0, top_k=0)
        self.assertIn(Constants.MIN_TWEETS, str(cm.exception))
        self.assertIn(Constants.TOP_K, str(cm.exception))

    def test_require(self):
        config = Config(tweets_file="tweets.jsonl")
        config.require(Constants.TWEETS_FILE)
        with self.assertRaises(ConfigException) as cm:
            config.require(Constants.TWEETS_FILE, Constants.ARTICLES_FILE)
        self.assertIn(Constants.ARTICLES_FILE, str(cm.exception))

    def test_unknown_key(self):
        path = os.path.join(self.tmp, "custom_rc")
        with open(path, "w", encoding="utf-8") as f:
            f.write("colour=blue\nnot a setting\n")
        with self.assertLogs(level="WARNING") as logs:
            Config(sentilib_rc=path)
        self.assertEqual(len(logs.output), 2)

    def test_save_flat(self):
        config = Config(sentilib_rc=self.copy("sentilib_rc"))
        config.set(Constants.MIN_TWEETS, 15)
        config.save_config()

        text = pathlib.Path(config.config_file_path).read_text("utf-8")
        self.assertIn("min_tweets=15\n", text)
        self.assertIn("aspect_mode=exclusive\n", text)

    def test_save_yaml(self):
        config = Config(sentilib_rc=self.copy("sentilib_rc.yml"))
        config.set(Constants.MIN_TWEETS, 15)
        config.save_config()

        with open(config.config_file_path, encoding="utf-8") as f:
            saved = yaml.safe_load(f)
        self.assertEqual(saved[Constants.RUNTIME_SECTION][Constants.MIN_TWEETS], 15)
        reloaded = Config(sentilib_rc=config.config_file_path)
        self.assertEqual(reloaded.get_min_tweets(), 15)
        self.assertEqual(reloaded.get_correlation_bins(), [0.8, 0.5])

    def test_save_to_new_path(self):
        config = Config(sentilib_rc=self.copy("sentilib_rc"), workers=3)

        path = os.path.join(self.tmp, "saved.yaml")
        config.save_config(path)
        self.assertTrue(config.is_yaml)
        with open(path, encoding="utf-8") as f:
            self.assertIn(Constants.RUNTIME_SECTION, yaml.safe_load(f))
        reloaded = Config(sentilib_rc=path)
        self.assertEqual(reloaded.get_workers(), 3)
        self.assertEqual(reloaded.get_min_tweets(), 10)

        path = os.path.join(self.tmp, "saved_rc")
        config.save_config(path)
        self.assertFalse(config.is_yaml)
        reloaded = Config(sentilib_rc=path)
        self.assertFalse(reloaded.is_yaml)
        self.assertEqual(reloaded.get_correlation_bins(), [0.9, 0.6])

    def test_save_without_file(self):
        with self.assertLogs(level="WARNING"):
            Config().save_config()

    def test_setup_logging(self):
        log_file = os.path.join(self.tmp, "logs", "sentilib.log")
        config = Config(log_file=log_file, log_level="debug")
        root = logging.getLogger()
        self.addCleanup(root.setLevel, root.level)
        self.addCleanup(self.close_handlers, root)

        config.setup_logging()

        self.assertTrue(os.path.isdir(os.path.dirname(log_file)))
        self.assertEqual(root.level, logging.DEBUG)

    @staticmethod
    def close_handlers(root):
        for handler in root.handlers[:]:
            if isinstance(handler, logging.FileHandler):
                root.removeHandler(handler)
                handler.close()
