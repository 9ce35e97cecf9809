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

import random
import time
from concurrent.futures import ThreadPoolExecutor

from altmetrics_sentiment.sentilib.aspects import load_aspect_keywords, match_aspects
from altmetrics_sentiment.sentilib.constants import Constants
from altmetrics_sentiment.sentilib.corpus import Tweet, join
from altmetrics_sentiment.sentilib.lexgen import generate_lexicon
from altmetrics_sentiment.sentilib.preprocess import clean_corpus
from altmetrics_sentiment.sentilib.strength import (
    classify_trinary,
    load_default_lexicon,
    score_texts,
)
from altmetrics_sentiment.sentilib.summarize import article_score, domain_summary

WORDS = (
    "great good bad awful paper method results the is not very data study new "
    "interesting wrong title @someone #science http://example.org/x &amp; can't !!"
).split()


class PipelineBenchmark:
    """
    Times each pipeline stage on a synthetic corpus.
    """

    def __init__(self, tweets: int = 10000, articles: int = 200, seed: int = 11):
        rng = random.Random(seed)
        self.tweets = [
            Tweet(
                altmetric_id=str(rng.randrange(articles)),
                tweet_id=str(i),
                text=" ".join(rng.choice(WORDS) for _ in range(rng.randint(3, 20))),
            )
            for i in range(tweets)
        ]
        self.lexicon = load_default_lexicon()
        self.timings = {}

    def timed(self, name, fn, *args, **kwargs):
        start = time.perf_counter()
        result = fn(*args, **kwargs)
        self.timings[name] = time.perf_counter() - start
        return result

    def run(self, workers: int = 1) -> dict:
        with ThreadPoolExecutor(workers) as executor:
            cleaned = self.timed(
                "clean", clean_corpus, self.tweets, executor=executor
            ).kept()
            texts = [t.text for t in cleaned]
            scores = self.timed(
                "score", score_texts, self.lexicon, texts, executor=executor
            )
            corpus = [(t, classify_trinary(s)) for t, s in zip(cleaned, scores)]
            self.timed("lexgen", generate_lexicon, corpus)

            docs = self.timed("join", join, cleaned, {}, 10)
            sents = self.timed(
                "articles",
                lambda: [article_score(d, self.lexicon, min_tweets=10) for d in docs],
            )
            self.timed("domains", domain_summary, sents)
            keywords = load_aspect_keywords()
            self.timed(
                "aspects",
                lambda: list(
                    executor.map(
                        lambda d: match_aspects(
                            d, keywords, Constants.ASPECT_MODE_DOUBLE_COUNT
                        ),
                        docs,
                    )
                ),
            )
        return self.timings


if __name__ == "__main__":
    benchmark = PipelineBenchmark()
    for workers in (1, 4):
        print(f"workers={workers}")
        for stage, seconds in benchmark.run(workers).items():
            print(f"  {stage:<10} {seconds:8.3f}s")
