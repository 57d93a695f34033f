"""
Newton trees, Newton processes and invariants of ideals in Q[x,y].

This package runs the Newton algorithm on ideals of the plane regarded in
C[[x,y]] with exact rational arithmetic, and reads integral closures,
multiplicities, Rees valuations and Lojasiewicz exponents off the result.
"""

from .algebra import BPoly, IdealGens, UPoly, parse_ideal, parse_poly
from .analyzer import AnalysisResult, IdealAnalyzer
from .callback import AlgorithmCallback, PolygonRecorder, StepLogger
from .closure import format_factorization, same_integral_closure, zariski_factorization
from .invariants import (
    degree_function,
    hs_multiplicity,
    hs_via_areas,
    invariants_report,
    j_multiplicity,
    lojasiewicz,
    mult_m,
    rees_valuations,
    valuation_Nv,
)
from .models import GENERIC, NewtonMap, RunConfig
from .process import NewtonProcess, merge_processes
from .storage import FileSystemReportStorage, load_ideal
from .tree import NewtonTree, reconstruct_tree

__version__ = "0.1.0"

__all__ = [
    "BPoly",
    "UPoly",
    "IdealGens",
    "parse_poly",
    "parse_ideal",
    "GENERIC",
    "NewtonMap",
    "RunConfig",
    "IdealAnalyzer",
    "AnalysisResult",
    "AlgorithmCallback",
    "PolygonRecorder",
    "StepLogger",
    "NewtonProcess",
    "merge_processes",
    "NewtonTree",
    "reconstruct_tree",
    "same_integral_closure",
    "zariski_factorization",
    "format_factorization",
    "valuation_Nv",
    "mult_m",
    "hs_multiplicity",
    "hs_via_areas",
    "j_multiplicity",
    "degree_function",
    "rees_valuations",
    "lojasiewicz",
    "invariants_report",
    "FileSystemReportStorage",
    "load_ideal",
]
