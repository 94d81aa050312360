"""Machine translation metrics: hLEPOR, BLEU, ROUGE-L and exact-match METEOR."""

import json

from ._mtmetrics import (
    HleporParams,
    InputError,
    __version__,
    align,
    bleu_signature,
    extract_ngrams,
    hlepor_corpus,
    hlepor_sentence,
    hpr,
    improvement_rate,
    language_pairs,
    lcs_length,
    length_penalty,
    meteor_exact,
    npd,
    preset,
    rouge_l_f1,
    tokenize,
)
from . import _mtmetrics as _core

__all__ = [
    "HleporParams",
    "InputError",
    "align",
    "bleu_corpus",
    "bleu_signature",
    "evaluate",
    "extract_ngrams",
    "hlepor_corpus",
    "hlepor_sentence",
    "hpr",
    "improvement_rate",
    "language_pairs",
    "lcs_length",
    "length_penalty",
    "meteor_exact",
    "npd",
    "preset",
    "rouge_l_f1",
    "tokenize",
    "winner_matrix",
]


def bleu_corpus(hyps, refs, *, max_n=4, smoothing="none", k=1.0, tokenize="13a",
                lowercase=True, threads=1):
    """Corpus BLEU. Returns precisions, bp, score (0-100), token counts and signature."""
    return json.loads(_core._bleu_corpus(list(hyps), list(refs), max_n, smoothing, k,
                                         tokenize, lowercase, threads))


def evaluate(hyps, refs, metrics=("bleu", "hlepor"), *, tokenize="13a", lowercase=True,
             lang_pair="en-es", hlepor_params=None, max_n=4, smoothing="none", k=1.0,
             segment_bleu=False, threads=1):
    """Scores a corpus with several metrics; same JSON layout as the CLI."""
    if isinstance(metrics, str):
        metrics = [metrics]
    return json.loads(_core._evaluate(list(hyps), list(refs), ",".join(metrics), tokenize,
                                      lowercase, lang_pair, hlepor_params, max_n, smoothing, k,
                                      segment_bleu, threads))


def winner_matrix(rows, *, scales=None, round=None):
    """Per-task per-metric winners from (system, task, metric, value) rows."""
    table = {"rows": [{"system": s, "task": t, "metric": m, "value": v} for s, t, m, v in rows]}
    if scales:
        table["scales"] = dict(scales)
    return json.loads(_core._winner_matrix(json.dumps(table), round))
