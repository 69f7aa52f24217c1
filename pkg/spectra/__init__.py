"""
Interval Spectra

Tools for studying edge labelings of graphs under which vertices see an
interval of labels: the structure of the subgraph those vertices induce,
galaxies (caterpillars) and their full interval labelings, gradient paths,
exhaustive and sampled verification, and search for labelings with many
interval vertices.
"""

from loguru import logger

from .classify import check_theorem
from .galaxy import build_galaxy, decompose_galaxy, galaxy_labeling, is_galaxy
from .graph import Graph, from_edge_list, parse_graph6, serialize_graph6
from .interface import SpectraInterface
from .labeling import Labeling, interval_vertices, spectrum

# silent as a library until configure_logging is called
logger.disable("spectra")

__version__ = "1.0.0"

__all__ = [
    'Graph',
    'Labeling',
    'SpectraInterface',
    'build_galaxy',
    'check_theorem',
    'decompose_galaxy',
    'from_edge_list',
    'galaxy_labeling',
    'interval_vertices',
    'is_galaxy',
    'parse_graph6',
    'serialize_graph6',
    'spectrum',
]
