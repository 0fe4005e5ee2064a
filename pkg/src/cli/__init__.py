"""Command-line surface.

Request execution, JSON report models and the console summary.
"""

from src.cli.report import (
    ErrorModel,
    LocusModel,
    PointModel,
    PresentationModel,
    Report,
    ReportBatch,
    SyzygyModel,
    VerdictModel,
)
from src.cli.runner import (
    COMMANDS,
    AnalysisRequest,
    CorpusEntry,
    CorpusSummary,
    analyze_polynomial,
    run,
    run_corpus,
)

__all__ = [
    "COMMANDS",
    "AnalysisRequest",
    "CorpusEntry",
    "CorpusSummary",
    "ErrorModel",
    "LocusModel",
    "PointModel",
    "PresentationModel",
    "Report",
    "ReportBatch",
    "SyzygyModel",
    "VerdictModel",
    "analyze_polynomial",
    "run",
    "run_corpus",
]
