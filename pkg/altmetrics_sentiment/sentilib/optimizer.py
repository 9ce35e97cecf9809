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
Strength list training against a labelled corpus.
"""
from __future__ import annotations

import json
import logging
from concurrent.futures import Executor
from typing import Dict, List, Sequence, Set, Tuple

from altmetrics_sentiment.sentilib.constants import Constants
from altmetrics_sentiment.sentilib.strength import (
    StrengthLexicon,
    classify_trinary,
    score_sentences,
    tokenize,
)


class OptimizerException(Exception):
    """
    The optimizer was given unusable input.
    """

    pass


class StrengthChange:
    """
    One accepted strength adjustment.
    """

    def __init__(self, pass_number: int, term: str, old: int, new: int, gain: int):
        self.pass_number = pass_number
        self.term = term
        self.old = old
        self.new = new
        self.gain = gain

    def to_dict(self) -> dict:
        return {
            "pass": self.pass_number,
            "term": self.term,
            "old_strength": self.old,
            "new_strength": self.new,
            "gain": self.gain,
        }

    def __str__(self):
        return json.dumps(self.to_dict())


class OptimizationResult:
    """
    Outcome of :py:func:`optimize_strengths`.
    """

    def __init__(
        self,
        lexicon: StrengthLexicon,
        audit: List[StrengthChange],
        correct_before: int,
        correct_after: int,
        passes: int,
        converged: bool,
    ):
        self.lexicon = lexicon
        self.audit = audit
        self.correct_before = correct_before
        self.correct_after = correct_after
        self.passes = passes
        self.converged = converged

    def to_dict(self) -> dict:
        return {
            "correct_before": self.correct_before,
            "correct_after": self.correct_after,
            "passes": self.passes,
            "converged": self.converged,
            "changes": len(self.audit),
        }

    def __str__(self):
        return json.dumps(self.to_dict())


def _build_index(
    lex: StrengthLexicon, tokenized: List[List[Tuple[List[str], str]]]
) -> Dict[str, Set[int]]:
    """
    Map each lexicon term to the indices of the texts whose score it can
    influence.
    """
    index = {}
    for i, sentences in enumerate(tokenized):
        for tokens, _ in sentences:
            for token in tokens:
                if token in lex.emoticons:
                    continue
                if token in lex.term_strengths:
                    term = token
                else:
                    term = lex.correct(token)
                    if term not in lex.term_strengths:
                        continue
                index.setdefault(term, set()).add(i)
    return index


def optimize_strengths(
    lex: StrengthLexicon,
    labeled_corpus: Sequence[Tuple[str, str]],
    min_gain: int = Constants.DEFAULT_MIN_GAIN,
    max_passes: int = Constants.DEFAULT_MAX_PASSES,
    executor: Executor = None,
) -> OptimizationResult:
    """
    Adjust term strengths by one step at a time while that improves the
    number of correctly classified texts.

    Terms are visited in lexicographic order.  For each term, raising and
    lowering the magnitude by one (within 2..5) are tried; the better of the
    two, preferring the raise on a tie, is kept when it fixes at least
    ``min_gain`` more texts than it breaks.  Passes repeat until a pass
    changes nothing or ``max_passes`` is reached.

    :param lex: starting lexicon
    :type lex: StrengthLexicon
    :param labeled_corpus: ``(text, gold label)`` pairs
    :type labeled_corpus: Sequence[Tuple[str, str]]
    :param min_gain: smallest accepted gain in correct classifications
    :type min_gain: int
    :param max_passes: pass limit
    :type max_passes: int
    :param executor: optional executor for re-scoring
    :type executor: Executor

    :return: adjusted lexicon and audit log
    :rtype: OptimizationResult

    :raises OptimizerException: for an empty corpus or an unknown label
    """
    if not labeled_corpus:
        raise OptimizerException("Cannot optimize strengths on an empty corpus")

    labels = [Constants.POSITIVE, Constants.NEGATIVE, Constants.NEUTRAL]
    gold = []
    texts = []
    for text, label in labeled_corpus:
        if label not in labels:
            raise OptimizerException(f"Unknown label {label!r}")
        texts.append(text)
        gold.append(label)

    tokenized = [tokenize(text or "", lex.emoticons) for text in texts]
    index = _build_index(lex, tokenized)

    def correct_flags(lexicon: StrengthLexicon, indices: List[int]) -> List[bool]:
        def check(i):
            return classify_trinary(score_sentences(lexicon, tokenized[i])) == gold[i]

        if executor is None:
            return [check(i) for i in indices]
        return list(executor.map(check, indices))

    correct = correct_flags(lex, list(range(len(texts))))
    correct_before = sum(correct)

    audit = []
    passes = 0
    converged = False
    while passes < max_passes:
        passes += 1
        changed = False

        for term in sorted(lex.term_strengths):
            affected = sorted(index.get(term, ()))
            if not affected:
                continue

            old = lex.term_strengths[term]
            sign = 1 if old > 0 else -1
            baseline = sum(correct[i] for i in affected)

            best = None
            for magnitude in (abs(old) + 1, abs(old) - 1):
                if not Constants.MIN_STRENGTH <= magnitude <= Constants.MAX_STRENGTH:
                    continue
                candidate = lex.with_strengths({term: sign * magnitude})
                flags = correct_flags(candidate, affected)
                gain = sum(flags) - baseline
                if best is None or gain > best[0]:
                    best = (gain, candidate, flags, sign * magnitude)

            if best is None or best[0] < min_gain:
                continue

            gain, lex, flags, new = best
            for i, flag in zip(affected, flags):
                correct[i] = flag
            audit.append(StrengthChange(passes, term, old, new, gain))
            logging.debug(f"pass {passes}: {term} {old} -> {new}, gain {gain}")
            changed = True

        if not changed:
            converged = True
            break

    if not converged:
        logging.warning(f"Strength optimization stopped after {max_passes} passes")

    result = OptimizationResult(
        lexicon=lex,
        audit=audit,
        correct_before=correct_before,
        correct_after=sum(correct),
        passes=passes,
        converged=converged,
    )
    logging.info(f"Strength optimization: {result}")
    return result
