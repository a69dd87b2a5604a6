"""Plane graphs without short adjacent cycles: class checks, configuration
detectors, discharging audits, and constructive 3-coloring."""

from .coloring import ExtensionProblem, color_planar, count_3colorings, exact_3color, extend, verify
from .cycles import DEFAULT_SPEC, Cycle, NonadjacencySpec, check_class, enumerate_cycles, region_partition
from .discharging import RuleOptions, apply_rules, audit, initial_charges
from .harness import enumerate_plane_graphs, filter_class, random_plane_graph
from .pgr import dump, dumps, load, loads
from .plane import PlaneGraph, build_from_rotation, from_rotation_lists
from .reductions import ReductionStep, find_reduction, pull_back
from .structure import bad_vertices, checklist, find_simitetrads, find_tetrads, max_consecutive_bad

__all__ = [
    "Cycle",
    "DEFAULT_SPEC",
    "ExtensionProblem",
    "NonadjacencySpec",
    "PlaneGraph",
    "ReductionStep",
    "RuleOptions",
    "apply_rules",
    "audit",
    "bad_vertices",
    "build_from_rotation",
    "check_class",
    "checklist",
    "color_planar",
    "count_3colorings",
    "dump",
    "dumps",
    "enumerate_cycles",
    "enumerate_plane_graphs",
    "exact_3color",
    "extend",
    "filter_class",
    "find_reduction",
    "find_simitetrads",
    "find_tetrads",
    "from_rotation_lists",
    "initial_charges",
    "load",
    "loads",
    "max_consecutive_bad",
    "pull_back",
    "random_plane_graph",
    "region_partition",
    "verify",
]
