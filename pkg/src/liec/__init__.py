"""Locally irregular edge colorings of trees, unicyclic graphs and cacti."""
from .cactus import EndGrape, cactus_liec, end_grapes, find_end_grape, grape_liec, reduce_noncolorable_berry
from .classify import ColorabilityClass, Tag, classify, is_colorable, recognize_T_family
from .coloring import EdgeColoring, is_liec, permute_colors, sum_colorings, verify_liec
from .errors import GraphError, LiecError, NonColorableError, NotApplicable, ParseError, SolverBug
from .generators import all_cacti, gen_bowtie, gen_random_cactus, gen_random_tree, gen_T_member
from .graph import Graph, decompose_blocks, is_cactus, parse_edge_list
from .oracle import exact_chi_irr, is_colorable_exhaustive
from .trees import tree_liec
from .unicyclic import unicyclic_liec
