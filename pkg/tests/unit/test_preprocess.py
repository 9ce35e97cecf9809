import pathlib
import random
import unittest
from concurrent.futures import ThreadPoolExecutor

import altmetrics_sentiment.sentilib.data as sample_data
from altmetrics_sentiment.sentilib.constants import Constants
from altmetrics_sentiment.sentilib.corpus import Tweet, load_tweets
from altmetrics_sentiment.sentilib.preprocess import (
    MENTION_PATTERN,
    REPLACEMENT_SEQUENCES,
    URL_PATTERNS,
    CleanTweet,
    TweetCleaner,
    clean_corpus,
    clean_tweet,
    dedupe,
    expand_negations,
    is_english,
    load_contractions,
    remove_title_terms,
)


class PreprocessTests(unittest.TestCase):
    """
    Tests for tweet cleaning.
    """

    DATA_DIR = pathlib.Path(__file__).parent / "data"
    SAMPLE_DIR = pathlib.Path(sample_data.__file__).parent

    def test_table_one_golden_output(self):
        tweets = list(load_tweets(str(self.DATA_DIR / "table1_tweets.jsonl")))
        expected = (self.DATA_DIR / "table1_cleaned.txt").read_text("utf-8")

        result = clean_corpus(tweets)

        self.assertEqual(len(result.kept()), 6)
        self.assertEqual(
            "".join(t.text + "\n" for t in result.kept()), expected
        )
        self.assertEqual(
            [t.tweet_id for t in result.kept()], [t.tweet_id for t in tweets]
        )

    def test_idempotent_on_sample_corpus(self):
        cleaner = TweetCleaner()
        tweets = list(load_tweets(str(self.SAMPLE_DIR / "sample_tweets.jsonl")))
        tweets += list(load_tweets(str(self.DATA_DIR / "table1_tweets.jsonl")))
        for tweet in tweets:
            once = cleaner.clean_tweet(tweet)
            twice = cleaner.clean_tweet(once)
            self.assertEqual(once.text, twice.text)
            self.assertEqual(once.dropped, twice.dropped)

    def test_idempotent_with_titles(self):
        title = "Graphene membranes: a new route"
        text = "Graphene MEMBRANES are great! see http://t.co/x @me"
        once = clean_tweet(Tweet("1", "1", text), title)
        twice = clean_tweet(Tweet("1", "1", once.text), title)
        self.assertEqual(once.text, "are great! see")
        self.assertEqual(twice.text, once.text)

    def test_noise_removal(self):
        text = "Check this &amp; see it @bob: www.example.com/x #Science"
        cleaned = clean_tweet(Tweet("1", "1", text))
        self.assertEqual(cleaned.text, "check this & see it science")

        cleaned = clean_tweet(Tweet("1", "2", "The data \ufffd is fine"))
        self.assertEqual(cleaned.text, "the data is fine")

    def test_markup_removed(self):
        text = "This is <b>bold</b> and &lt;i&gt;it&lt;/i&gt;"
        cleaned = clean_tweet(Tweet("1", "1", text))
        self.assertEqual(cleaned.text, "this is bold and it")

    def test_hash_removal_exposes_mention_and_url(self):
        once = clean_tweet(Tweet("1", "1", "read this @#peakoil paper now"))
        self.assertEqual(once.text, "read this paper now")
        self.assertIsNone(MENTION_PATTERN.search(once.text))

        once = clean_tweet(Tweet("1", "2", "the new paper h#ttp://t.co/abc is out"))
        self.assertEqual(once.text, "the new paper is out")
        twice = clean_tweet(Tweet("1", "2", once.text))
        self.assertEqual(twice.text, once.text)

        text = "this is w#ww.example.org and the &am#p; end"
        once = clean_tweet(Tweet("1", "3", text))
        self.assertEqual(once.text, "this is and the & end")

    def test_english_check_runs_on_raw_text(self):
        text = "@uno @dos @tres @cuatro @cinco @seis @siete @ocho the paper"
        cleaned = clean_tweet(Tweet("1", "1", text))
        self.assertEqual(cleaned.dropped, Constants.DROP_NON_ENGLISH)

    def test_english_check_runs_on_cleaned_text(self):
        text = "@the @of @and @is @it überraschende ergebnisse heute"
        cleaned = clean_tweet(Tweet("1", "1", text))
        self.assertEqual(cleaned.dropped, Constants.DROP_NON_ENGLISH)
        self.assertEqual(cleaned.text, "")

    def test_expand_negations(self):
        self.assertEqual(
            expand_negations("It isn't good and I can’t tell"),
            "It is not good and I can not tell",
        )
        self.assertEqual(expand_negations("We WON'T"), "We will not")
        self.assertEqual(expand_negations("nothing here"), "nothing here")

    def test_contractions_expanded_while_cleaning(self):
        cleaned = clean_tweet(Tweet("1", "1", "This doesn't work and it won't"))
        self.assertEqual(cleaned.text, "this does not work and it will not")

    def test_remove_title_terms(self):
        self.assertEqual(
            remove_title_terms(
                "great results on graphene membranes", "Graphene Membranes: a study"
            ),
            "great results on",
        )
        # Short and stop words of the title stay.
        self.assertEqual(
            remove_title_terms("the dna code rocks", "The DNA code"), "the dna rocks"
        )
        self.assertEqual(remove_title_terms("same text", None), "same text")

    def test_title_min_token_len(self):
        cleaner = TweetCleaner(title_min_token_len=3)
        self.assertEqual(
            cleaner.remove_title_terms("the dna code rocks", "The DNA code"),
            "the rocks",
        )

    def test_is_english(self):
        self.assertTrue(is_english("this is a paper about the data"))
        self.assertTrue(is_english("ok"))
        self.assertFalse(is_english(""))
        self.assertFalse(
            is_english("Dies ist ein sehr schöner Artikel über Wissenschaft")
        )
        # Numbers count towards the total.
        self.assertFalse(is_english("2012 2013 2014 2015 2016 2017 the results"))

    def test_english_threshold(self):
        text = "wow graphene membranes for the win"
        self.assertTrue(TweetCleaner(english_threshold=0.15).is_english(text))
        self.assertFalse(TweetCleaner(english_threshold=0.5).is_english(text))

    def test_drop_reasons(self):
        tweets = [
            Tweet("1", "1", "this is a great paper"),
            Tweet("1", "2", "This is a GREAT paper"),
            Tweet("2", "3", "this is a great paper"),
            Tweet("1", "4", "   "),
            Tweet("1", "5", "@someone http://t.co/abc"),
            Tweet("1", "6", "Dies ist ein sehr schöner Artikel über Wissenschaft"),
        ]
        result = clean_corpus(tweets)

        self.assertEqual([t.tweet_id for t in result], ["1", "2", "3", "4", "5", "6"])
        self.assertEqual(
            [t.dropped for t in result],
            [
                None,
                Constants.DROP_DUPLICATE,
                None,
                Constants.DROP_EMPTY,
                Constants.DROP_EMPTY,
                Constants.DROP_NON_ENGLISH,
            ],
        )
        self.assertEqual(
            result.drop_stats,
            {
                Constants.DROP_NON_ENGLISH: 1,
                Constants.DROP_DUPLICATE: 1,
                Constants.DROP_EMPTY: 2,
            },
        )
        self.assertEqual(result[5].text, "")
        self.assertEqual(result[1].text, "this is a great paper")

    def test_dedupe_keeps_first(self):
        tweets = [
            CleanTweet("1", "a", "same"),
            CleanTweet("1", "b", "", dropped=Constants.DROP_EMPTY),
            CleanTweet("1", "c", "same"),
        ]
        result = dedupe(tweets)
        self.assertEqual(
            [t.dropped for t in result],
            [None, Constants.DROP_EMPTY, Constants.DROP_DUPLICATE],
        )

    def test_parallel_matches_sequential(self):
        tweets = list(load_tweets(str(self.SAMPLE_DIR / "sample_tweets.jsonl")))
        sequential = clean_corpus(tweets)
        with ThreadPoolExecutor(4) as executor:
            parallel = clean_corpus(tweets, executor=executor)
        self.assertEqual(
            [t.to_dict() for t in sequential], [t.to_dict() for t in parallel]
        )
        self.assertEqual(sequential.drop_stats, parallel.drop_stats)

    def test_clean_tweet_keeps_metadata(self):
        tweets = list(load_tweets(str(self.SAMPLE_DIR / "sample_tweets.jsonl")))
        cleaned = clean_tweet(tweets[0])
        self.assertEqual(cleaned.posted_at, tweets[0].posted_at)
        self.assertEqual(cleaned.label, Constants.POSITIVE)
        self.assertEqual(cleaned.to_dict()["posted_at"], "2012-01-15T10:00:00+00:00")

    def test_load_contractions(self):
        path = self.SAMPLE_DIR / "contractions.tsv"
        contractions = load_contractions(str(path))
        self.assertEqual(contractions["can't"], "can not")
        self.assertEqual(len(contractions), 17)

    def test_bundled_contractions_are_the_default(self):
        path = str(self.SAMPLE_DIR / "contractions.tsv")
        self.assertEqual(load_contractions(), load_contractions(path))
        self.assertEqual(TweetCleaner().contractions, load_contractions())


class CleaningPropertyTests(unittest.TestCase):
    """
    Randomised checks of the cleaning invariants.
    """

    # Pieces that recombine into mentions, URLs and entities once a '#' or
    # a broken character between them is dropped.
    FRAGMENTS = [
        "@", "#", "h", "ttp", "s", "://", "t.co/", "www", ".", "&", "amp;",
        "<i>", "</i>", "�", "ï¿½", "isn't", "can’t", "great", "paper",
        "the", "is", "of", "this", "rt", "é", "_", ":", "'", " ", " ", " ",
    ]

    def random_text(self, rng):
        return "".join(rng.choice(self.FRAGMENTS) for _ in range(rng.randrange(40)))

    def test_cleaning_is_idempotent(self):
        rng = random.Random(7)
        cleaner = TweetCleaner()
        for i in range(2000):
            text = self.random_text(rng)
            once = cleaner.clean_tweet(Tweet("1", str(i), text))
            twice = cleaner.clean_tweet(Tweet("1", str(i), once.text))
            with self.subTest(text=text):
                self.assertEqual(twice.text, once.text)
                if once.dropped is None:
                    self.assertIsNone(twice.dropped)

    def test_no_residue_after_cleaning(self):
        rng = random.Random(8)
        cleaner = TweetCleaner()
        for i in range(2000):
            text = self.random_text(rng)
            cleaned = cleaner.clean_tweet(Tweet("1", str(i), text)).text
            with self.subTest(text=text):
                self.assertIsNone(MENTION_PATTERN.search(cleaned))
                for pattern in URL_PATTERNS:
                    self.assertIsNone(pattern.search(cleaned))
                for sequence in REPLACEMENT_SEQUENCES:
                    self.assertNotIn(sequence, cleaned)
                self.assertNotIn("#", cleaned)
                self.assertNotIn("  ", cleaned)
                self.assertEqual(cleaned, cleaned.lower())

    def test_negations_never_survive(self):
        rng = random.Random(9)
        cleaner = TweetCleaner()
        terms = sorted(cleaner.contractions)
        for _ in range(500):
            words = [rng.choice(terms + ["good", "paper", "x"]) for _ in range(6)]
            text = cleaner.expand_negations(" ".join(words))
            for term in terms:
                self.assertNotIn(term, text.lower())
