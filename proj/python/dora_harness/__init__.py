"""Python surface of the QA benchmark harness core.

The heavy lifting lives in the compiled ``_dora`` module; this package
re-exports its operations. When installed as a wheel the extension sits
inside the package; in a build tree it is importable from the build
directory via PYTHONPATH.
"""

try:
    from ._dora import *  # noqa: F401,F403
    from ._dora import __doc__ as _core_doc  # noqa: F401
except ImportError:  # build-tree layout
    from _dora import *  # noqa: F401,F403

__all__ = [
    "Tokenizer",
    "Bm25Index",
    "DoraError",
    "chunk_text",
    "normalize_answer",
    "numeric_mentions",
    "split_sentences",
    "token_f1",
    "rouge_l",
    "bleu",
    "hit_at_k",
    "recall_at_k",
    "knn_graph",
    "upsampled_manual_count",
    "parse_qa",
]
