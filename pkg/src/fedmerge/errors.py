"""Exception types shared across the package."""


class FedmergeError(Exception):
    """Base class for all package errors."""


class CorpusError(FedmergeError):
    """Corpus, topics or qrels input is unreadable or malformed."""


class IndexError_(FedmergeError):
    """Index construction or serialization failed."""


class SamplingError(FedmergeError):
    """Query-based sampling could not proceed."""


class SelectionError(FedmergeError):
    """Source selection received invalid input."""


class MergeError(FedmergeError):
    """Results merging received invalid input."""


class ModelError(FedmergeError):
    """Regressor fitting or prediction failed."""


class EvalError(FedmergeError):
    """Evaluation input is malformed."""


class ConfigError(FedmergeError):
    """Experiment configuration is invalid."""


class StageError(FedmergeError):
    """Pipeline stage failed; carries the stage name for diagnostics."""

    def __init__(self, stage: str, message: str):
        super().__init__(f"[{stage}] {message}")
        self.stage = stage
