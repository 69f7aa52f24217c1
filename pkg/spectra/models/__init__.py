"""
Result Models Package

This package contains the pydantic models returned by the toolkit's
operations and serialized by the CLI.
"""

from .paths import GradientPath
from .report import AnalysisReport
from .stats import LabelingStats, ViolationRecord
from .verdict import (
    ComponentVerdict,
    Direction,
    GalaxyCaseA,
    GalaxyCaseB,
    GalaxyCaseC,
    IsolatedVertex,
    LemmaReport,
    Overall,
    TheoremVerdict,
    Violation,
    ViolationReason,
)

__all__ = [
    'AnalysisReport',
    'ComponentVerdict',
    'Direction',
    'GalaxyCaseA',
    'GalaxyCaseB',
    'GalaxyCaseC',
    'GradientPath',
    'IsolatedVertex',
    'LabelingStats',
    'LemmaReport',
    'Overall',
    'TheoremVerdict',
    'Violation',
    'ViolationReason',
    'ViolationRecord',
]
