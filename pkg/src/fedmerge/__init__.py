"""Federated patent-retrieval simulator and results-merging library.

Splits a corpus into topical collections, samples them, selects sources
with CORI, searches with BM25, and merges per-collection result lists
into one globally comparable ranking using heuristic (CORI), regression
(SSL), per-collection (MM) or cross-collection (GM) learned strategies.
"""

__version__ = "0.1.0"

from fedmerge.corpus import CollectionSet, Document, Topic, build_query, load_corpus, partition_code
from fedmerge.engine import Index, RankedList, ScoredDoc, build_index, search
from fedmerge.evaluation import EvalResult, average_precision, evaluate_run, pres_at, recall_at
from fedmerge.merging import MergedRun, assign_artificial_scores, cori_merge, gm_merge, mm_merge, ssl_merge
from fedmerge.sampling import SampleSet, build_central_index, query_based_sample
from fedmerge.selection import CollectionStats, SourceScore, build_stats, cori_select

__all__ = [
    "CollectionSet",
    "CollectionStats",
    "Document",
    "EvalResult",
    "Index",
    "MergedRun",
    "RankedList",
    "SampleSet",
    "ScoredDoc",
    "SourceScore",
    "Topic",
    "assign_artificial_scores",
    "average_precision",
    "build_central_index",
    "build_index",
    "build_query",
    "build_stats",
    "cori_merge",
    "cori_select",
    "evaluate_run",
    "gm_merge",
    "load_corpus",
    "mm_merge",
    "partition_code",
    "pres_at",
    "query_based_sample",
    "recall_at",
    "search",
    "ssl_merge",
]
