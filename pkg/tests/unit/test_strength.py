import pathlib
import random
import tempfile
import unittest

from altmetrics_sentiment.sentilib.constants import Constants
from altmetrics_sentiment.sentilib.strength import (
    LexiconException,
    SentimentScore,
    StrengthLexicon,
    build_lexicon,
    classify_trinary,
    correct_spelling,
    load_default_lexicon,
    load_strength_lexicon,
    parse_strength_list,
    score_text,
    score_texts,
    tokenize,
)


class SpellingTests(unittest.TestCase):
    def test_repeated_letters(self):
        self.assertEqual(correct_spelling("hellllloooo"), "hello")
        self.assertEqual(correct_spelling("niice"), "nice")
        self.assertEqual(correct_spelling("goood"), "good")
        self.assertEqual(correct_spelling("coool"), "cool")
        self.assertEqual(correct_spelling("yessss"), "yes")

    def test_allowed_doubles_kept(self):
        self.assertEqual(correct_spelling("good"), "good")
        self.assertEqual(correct_spelling("feel"), "feel")
        self.assertEqual(correct_spelling("happy"), "happy")

    def test_custom_allowed_doubles(self):
        self.assertEqual(correct_spelling("aardvark", allowed_doubles="a"), "aardvark")
        self.assertEqual(correct_spelling("aardvark"), "ardvark")


class ScoreTests(unittest.TestCase):
    """
    Rule battery for the dual scorer, using the bundled lexicon.
    """

    @classmethod
    def setUpClass(cls):
        cls.lex = load_default_lexicon()

    def score(self, text):
        return score_text(self.lex, text)

    def test_negation_flips_unboosted_strength(self):
        self.assertEqual(self.lex.strength("happy"), 4)
        result = self.score("not so happy")
        self.assertEqual(result, (1, -4))
        self.assertEqual(classify_trinary(result), Constants.NEGATIVE)

    def test_empty_text_is_neutral(self):
        result = self.score("")
        self.assertEqual(result, SentimentScore(1, -1))
        self.assertEqual(classify_trinary(result), Constants.NEUTRAL)

    def test_exclamation(self):
        self.assertEqual(self.score("great!!"), (4, -1))
        self.assertEqual(self.score("great!"), (3, -1))
        self.assertEqual(self.score("the paper is out!"), (2, -1))
        self.assertGreaterEqual(self.score("bad!").positive, 2)

    def test_emphasis_monotone(self):
        for text in ("good", "bad", "very good", "terrible"):
            plain = self.score(text + ".")
            emphatic = self.score(text + "!!!")
            self.assertGreaterEqual(emphatic.positive, plain.positive)
            self.assertLessEqual(emphatic.negative, plain.negative)

    def test_boosters(self):
        self.assertEqual(self.score("very good"), (3, -1))
        self.assertEqual(self.score("extremely good"), (4, -1))
        self.assertEqual(self.score("slightly good"), (2, -1))
        self.assertEqual(self.score("extremely fraud"), (1, -5))
        self.assertEqual(self.score("very much good"), (3, -1))

    def test_booster_window_is_two_tokens(self):
        self.assertEqual(self.score("very the data good"), (2, -1))

    def test_negation_window(self):
        self.assertEqual(self.score("not bad"), (3, -1))
        self.assertEqual(self.score("not a very bad result"), (1, -4))
        self.assertEqual(self.score("no the data is good"), (2, -1))

    def test_sentences_combine(self):
        self.assertEqual(self.score("good. bad"), (2, -3))
        self.assertEqual(self.score("good and excellent"), (4, -1))

    def test_spelling_correction_while_scoring(self):
        self.assertEqual(self.score("niice paper"), (2, -1))
        self.assertEqual(self.score("sooo goood"), (3, -1))

    def test_classify_trinary(self):
        self.assertEqual(classify_trinary(SentimentScore(3, -2)), Constants.POSITIVE)
        self.assertEqual(classify_trinary(SentimentScore(2, -3)), Constants.NEGATIVE)
        self.assertEqual(classify_trinary(SentimentScore(3, -3)), Constants.NEUTRAL)

    def test_random_bounds(self):
        rng = random.Random(20240)
        vocabulary = sorted(self.lex.term_strengths)
        vocabulary += sorted(self.lex.boosters) + sorted(self.lex.inverters)
        vocabulary += ["the", "paper", "data", "!", "!!", "?", ".", "!?", "sooo"]
        for _ in range(100):
            text = " ".join(rng.choice(vocabulary) for _ in range(rng.randint(0, 15)))
            result = self.score(text)
            self.assertTrue(1 <= result.positive <= 5, text)
            self.assertTrue(-5 <= result.negative <= -1, text)

    def test_score_texts_keeps_order(self):
        texts = ["good", "bad", "", "not bad"]
        self.assertEqual(
            score_texts(self.lex, texts), [self.score(t) for t in texts]
        )

    def test_tokenize(self):
        self.assertEqual(
            tokenize("Good paper!! Really? ok"),
            [(["good", "paper"], "!!"), (["really"], "?"), (["ok"], "")],
        )


class LexiconTests(unittest.TestCase):
    def test_score_range_checked(self):
        self.assertRaises(ValueError, SentimentScore, 0, -1)
        self.assertRaises(ValueError, SentimentScore, 1, 0)
        self.assertRaises(ValueError, SentimentScore, 6, -1)

    def test_strength_range_checked(self):
        self.assertRaises(LexiconException, StrengthLexicon, {"odd": 6})
        self.assertRaises(LexiconException, StrengthLexicon, {"odd": 1})
        self.assertRaises(
            LexiconException, StrengthLexicon, {"very": 2}, {"very": 1}
        )

    def test_parse_strength_list(self):
        contents = "# comment\ngood\t2\nbad\t-7\nmeh\tx\nbroken line\ngood\t3\n"
        with self.assertLogs(level="WARNING") as logs:
            strengths = parse_strength_list(contents)
        self.assertEqual(strengths, {"good": 3})
        self.assertEqual(len(logs.records), 4)

    def test_build_lexicon_resolves_overlaps(self):
        with self.assertLogs(level="WARNING"):
            lex = build_lexicon(
                term_strengths={"not": -2, "good": 2},
                boosters={"very": 1, "not": 1},
                inverters={"not"},
            )
        self.assertEqual(dict(lex.term_strengths), {"good": 2})
        self.assertEqual(dict(lex.boosters), {"very": 1})
        self.assertEqual(lex.inverters, frozenset({"not"}))

    def test_with_strengths_does_not_modify(self):
        lex = load_default_lexicon()
        changed = lex.with_strengths({"good": 5})
        self.assertEqual(lex.strength("good"), 2)
        self.assertEqual(changed.strength("good"), 5)

    def test_save_and_load(self):
        lex = StrengthLexicon({"good": 2, "awful": -4})
        with tempfile.TemporaryDirectory() as tmp:
            path = str(pathlib.Path(tmp) / "strengths.tsv")
            lex.save(path)
            self.assertEqual(
                pathlib.Path(path).read_text("utf-8"), "awful\t-4\ngood\t2\n"
            )
            loaded = load_strength_lexicon(path)
        self.assertEqual(dict(loaded.term_strengths), {"good": 2, "awful": -4})

    def test_missing_file(self):
        self.assertRaises(LexiconException, load_strength_lexicon, "/no/such/file")


class StrengthPropertyTests(unittest.TestCase):
    """
    Randomised checks of the scorer and spelling correction.
    """

    SWAP = {
        Constants.POSITIVE: Constants.NEGATIVE,
        Constants.NEGATIVE: Constants.POSITIVE,
        Constants.NEUTRAL: Constants.NEUTRAL,
    }

    @classmethod
    def setUpClass(cls):
        cls.lex = load_default_lexicon()

    @staticmethod
    def flipped(lex):
        return lex.with_strengths({t: -s for t, s in lex.term_strengths.items()})

    def test_flipped_strengths_mirror_the_score(self):
        rng = random.Random(31)
        flipped = self.flipped(self.lex)
        self.assertEqual(self.flipped(flipped), self.lex)

        vocabulary = sorted(self.lex.term_strengths)
        vocabulary += sorted(self.lex.boosters) + sorted(self.lex.inverters)
        vocabulary += ["the", "paper", "sooo", "goood", ".", "?", "."]
        vocabulary = [t for t in vocabulary if t not in self.lex.emoticons]
        for _ in range(300):
            text = " ".join(rng.choice(vocabulary) for _ in range(rng.randint(0, 12)))
            score = score_text(self.lex, text)
            mirrored = score_text(flipped, text)
            with self.subTest(text=text):
                self.assertEqual(mirrored, (-score.negative, -score.positive))
                self.assertEqual(score_text(self.flipped(flipped), text), score)
                label = classify_trinary(score)
                self.assertEqual(classify_trinary(mirrored), self.SWAP[label])

    def test_spelling_correction_is_idempotent(self):
        rng = random.Random(32)
        letters = "aeioulnsgdrtpbzky"
        for _ in range(2000):
            token = "".join(
                rng.choice(letters) * rng.choice([1, 1, 2, 3, 5])
                for _ in range(rng.randint(1, 6))
            )
            once = correct_spelling(token)
            with self.subTest(token=token):
                self.assertEqual(correct_spelling(once), once)
                self.assertLessEqual(len(once), len(token))
