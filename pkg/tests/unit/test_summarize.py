import random
import unittest
from datetime import datetime, timezone

from altmetrics_sentiment.sentilib.constants import Constants
from altmetrics_sentiment.sentilib.corpus import ArticleDoc
from altmetrics_sentiment.sentilib.preprocess import CleanTweet
from altmetrics_sentiment.sentilib.strength import SentimentScore, load_default_lexicon
from altmetrics_sentiment.sentilib.summarize import (
    ArticleSentiment,
    SummarizeException,
    article_label_distribution,
    article_score,
    check_bins,
    citation_correlation,
    distribution_by_year,
    domain_scatter,
    domain_summary,
    label_article,
    normal_fit,
    score_histogram,
    sentiment_distribution,
    tweet_score,
)

PHYSICS = "Physics & Astronomy"
MEDICINE = "Medicine"


def doc(altmetric_id, texts, domains=(PHYSICS,), citations=0):
    tweets = [CleanTweet(altmetric_id, str(i), text) for i, text in enumerate(texts)]
    return ArticleDoc(altmetric_id, tweets, domains, citations)


def sent(altmetric_id, score, domains=(PHYSICS,), citations=0):
    return ArticleSentiment(
        altmetric_id,
        score,
        label_article(score),
        30,
        domain_codes=domains,
        citation_count=citations,
    )


class ArticleScoreTests(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.lex = load_default_lexicon()

    def test_tweet_score(self):
        self.assertEqual(tweet_score(SentimentScore(1, -1)), 0.5)
        self.assertEqual(tweet_score(SentimentScore(5, -1)), 1.0)
        self.assertEqual(tweet_score(SentimentScore(1, -5)), 0.0)

    def test_thresholds_are_strict(self):
        self.assertEqual(label_article(0.7), Constants.NEUTRAL)
        self.assertEqual(label_article(0.7000001), Constants.POSITIVE)
        self.assertEqual(label_article(0.3), Constants.NEUTRAL)
        self.assertEqual(label_article(0.2999999), Constants.NEGATIVE)
        self.assertEqual(label_article(0.5, 0.4, 0.1), Constants.POSITIVE)

    def test_article_score(self):
        result = article_score(
            doc("1", ["great", "good", "bad"], citations=5), self.lex, min_tweets=3
        )
        self.assertAlmostEqual(result.score, (0.75 + 0.625 + 0.25) / 3)
        self.assertEqual(result.label, Constants.NEUTRAL)
        self.assertEqual(result.tweet_count, 3)
        self.assertAlmostEqual(result.avg_pos, 0.4)
        self.assertAlmostEqual(result.avg_neg, 1 / 3)
        self.assertEqual(result.citation_count, 5)
        self.assertEqual(result.domain_codes, frozenset([PHYSICS]))

    def test_article_score_with_precomputed_scores(self):
        scores = [SentimentScore(5, -1)] * 2
        result = article_score(doc("1", ["a", "b"]), self.lex, 2, scores=scores)
        self.assertEqual(result.score, 1.0)
        self.assertEqual(result.label, Constants.POSITIVE)

    def test_article_score_errors(self):
        self.assertRaises(
            SummarizeException, article_score, doc("1", ["good"]), self.lex, 30
        )
        self.assertRaises(
            SummarizeException,
            article_score,
            doc("1", ["good", "bad"]),
            self.lex,
            1,
            scores=[SentimentScore()],
        )

    def test_random_scores_partition(self):
        rng = random.Random(99)
        for _ in range(200):
            scores = [
                SentimentScore(rng.randint(1, 5), -rng.randint(1, 5))
                for _ in range(rng.randint(1, 40))
            ]
            texts = ["x"] * len(scores)
            result = article_score(doc("1", texts), self.lex, 1, scores=scores)
            self.assertTrue(0.0 <= result.score <= 1.0)
            if result.score > 0.7:
                self.assertEqual(result.label, Constants.POSITIVE)
            elif result.score < 0.3:
                self.assertEqual(result.label, Constants.NEGATIVE)
            else:
                self.assertEqual(result.label, Constants.NEUTRAL)


class AggregationTests(unittest.TestCase):
    def test_domain_summary(self):
        sents = [
            sent("1", 0.8, (PHYSICS, MEDICINE)),
            sent("2", 0.6, (PHYSICS,)),
            sent("3", 0.2, (MEDICINE,)),
        ]
        summaries = {s.domain_code: s for s in domain_summary(sents)}

        self.assertEqual(sorted(summaries), [MEDICINE, PHYSICS])
        physics = summaries[PHYSICS]
        self.assertEqual(physics.doc_count, 2)
        self.assertAlmostEqual(physics.mu, 0.7)
        self.assertAlmostEqual(physics.sigma, 0.1414213562, places=6)
        self.assertEqual(physics.label_counts[Constants.POSITIVE], 1)
        self.assertEqual(physics.label_counts[Constants.NEUTRAL], 1)
        self.assertEqual(summaries[MEDICINE].label_counts[Constants.NEGATIVE], 1)

        single = domain_summary([sent("1", 0.4)])[0]
        self.assertEqual(single.sigma, 0.0)
        self.assertEqual(single.normal_fit, (0.4, 0.0))

        fit = normal_fit(domain_summary(sents))
        self.assertEqual(list(fit.columns), ["domain", "n", "mu", "sigma"])
        self.assertEqual(list(fit["domain"]), [MEDICINE, PHYSICS])

    def test_sentiment_distribution(self):
        pct = sentiment_distribution(
            [Constants.POSITIVE, Constants.NEGATIVE, Constants.NEUTRAL]
        )
        self.assertEqual(pct, (33.34, 33.33, 33.33))
        self.assertRaises(SummarizeException, sentiment_distribution, [])

        rng = random.Random(5)
        labels = [Constants.POSITIVE, Constants.NEGATIVE, Constants.NEUTRAL]
        for _ in range(100):
            sample = [rng.choice(labels) for _ in range(rng.randint(1, 500))]
            self.assertAlmostEqual(sum(sentiment_distribution(sample)), 100, delta=0.01)

    def test_distribution_by_year(self):
        def at(year):
            return datetime(year, 6, 1, tzinfo=timezone.utc)

        rows = distribution_by_year(
            [
                (at(2012), Constants.POSITIVE),
                (at(2012), Constants.NEGATIVE),
                (at(2013), Constants.NEUTRAL),
                (None, Constants.POSITIVE),
            ]
        )
        self.assertEqual(list(rows["year"]), ["2012", "2013", "all"])
        self.assertEqual(list(rows["n"]), [2, 1, 4])
        shares = rows[["pct_pos", "pct_neg", "pct_neu"]]
        self.assertEqual(list(shares.iloc[0]), [50, 50, 0])
        self.assertEqual(list(shares.iloc[2]), [50, 25, 25])

    def test_article_label_distribution(self):
        sents = [sent("1", 0.9), sent("2", 0.1), sent("3", 0.5), sent("4", 0.95)]
        rows = article_label_distribution(sents)
        self.assertEqual(rows.iloc[0]["n_articles"], 4)
        self.assertEqual(rows.iloc[0]["n_positive"], 2)
        self.assertEqual(rows.iloc[0]["pct_pos"], 50.0)
        self.assertEqual(len(article_label_distribution([])), 0)

    def test_score_histogram(self):
        sents = [sent("1", 0.1), sent("2", 0.2), sent("3", 0.9)]
        rows = score_histogram(sents, bins=4)

        physics = rows[rows["domain"] == PHYSICS]
        self.assertEqual(list(physics["count"]), [2, 0, 0, 1])
        self.assertEqual(list(rows[rows["domain"] == "all"]["count"]), [2, 0, 0, 1])
        self.assertEqual(list(physics["bin_start"]), [0.0, 0.25, 0.5, 0.75])

        constant = score_histogram([sent("1", 0.6), sent("2", 0.6)], bins=4)
        self.assertEqual(list(constant["fitted"])[:4], [0.0, 0.0, 2.0, 0.0])

    def test_domain_scatter(self):
        rows = domain_scatter([sent("2", 0.6, (MEDICINE, PHYSICS)), sent("1", 0.3)])
        self.assertEqual(
            list(zip(rows["domain"], rows["altmetric_id"])),
            [(MEDICINE, "2"), (PHYSICS, "1"), (PHYSICS, "2")],
        )


class CorrelationTests(unittest.TestCase):
    def test_concordant_and_anti_concordant(self):
        sents = [sent(str(i), 0.755 + i * 0.02) for i in range(10)]
        concordant = {s.altmetric_id: 10 * i for i, s in enumerate(sents)}
        anti = {s.altmetric_id: 1000 - 10 * i for i, s in enumerate(sents)}

        for citations, expected in ((concordant, 1.0), (anti, -1.0)):
            rows = citation_correlation(sents, citations)
            self.assertEqual([r.threshold for r in rows], [0.85, 0.8, 0.75])
            for row in rows:
                self.assertTrue(row.defined)
                self.assertAlmostEqual(row.coefficient, expected)

    def test_bin_membership(self):
        sents = [sent(str(i), 0.755 + i * 0.02) for i in range(10)]
        citations = {s.altmetric_id: i for i, s in enumerate(sents)}
        rows = citation_correlation(sents, citations)
        self.assertEqual([r.n for r in rows], [5, 7, 10])

    def test_undefined_bins(self):
        sents = [sent("1", 0.9), sent("2", 0.95), sent("3", 0.5)]
        rows = citation_correlation(sents, {"1": 1, "2": 2, "3": 3})
        self.assertFalse(rows[0].defined)
        self.assertEqual(rows[0].to_dict()["coefficient"], Constants.UNDEFINED)

        sents = [sent(str(i), 0.9) for i in range(5)]
        with self.assertLogs(level="WARNING"):
            rows = citation_correlation(sents, {str(i): i for i in range(5)})
        self.assertFalse(any(r.defined for r in rows))

    def test_missing_citations_left_out(self):
        sents = [sent(str(i), 0.9 + i * 0.01) for i in range(5)]
        rows = citation_correlation(sents, {"0": 1, "1": 2, "2": 3}, bins=[0.8])
        self.assertEqual(rows[0].n, 3)
        self.assertAlmostEqual(rows[0].coefficient, 1.0)

    def test_pearson(self):
        sents = [sent(str(i), 0.8 + i * 0.01) for i in range(5)]
        citations = {str(i): 2 * i + 1 for i in range(5)}
        rows = citation_correlation(
            sents, citations, bins=[0.7], method=Constants.CORRELATION_PEARSON
        )
        self.assertAlmostEqual(rows[0].coefficient, 1.0)
        self.assertRaises(
            SummarizeException, citation_correlation, sents, citations, [0.7], "kendall"
        )

    def test_check_bins(self):
        check_bins([0.85, 0.8, 0.75])
        self.assertRaises(SummarizeException, check_bins, [])
        self.assertRaises(SummarizeException, check_bins, [0.8, 0.85])
        self.assertRaises(SummarizeException, check_bins, [1.0])
        self.assertRaises(SummarizeException, check_bins, [0.8, 0.8])

    def test_rank_correlation_ignores_monotone_rescaling(self):
        rng = random.Random(41)
        for _ in range(50):
            sents = [
                sent(str(i), round(rng.uniform(0.7, 1.0), 3))
                for i in range(rng.randint(3, 40))
            ]
            citations = {s.altmetric_id: rng.randint(0, 50) for s in sents}
            rescaled = {k: 3 * v * v + 7 for k, v in citations.items()}
            shuffled = list(sents)
            rng.shuffle(shuffled)

            rows = citation_correlation(sents, citations)
            for other in (
                citation_correlation(sents, rescaled),
                citation_correlation(shuffled, citations),
            ):
                for row, again in zip(rows, other):
                    self.assertEqual(row.n, again.n)
                    self.assertEqual(row.defined, again.defined)
                    if row.defined:
                        self.assertAlmostEqual(
                            row.coefficient, again.coefficient, delta=1e-12
                        )
