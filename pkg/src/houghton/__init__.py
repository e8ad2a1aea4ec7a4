"""Houghton's groups H_n: elements, words, word metric, and morphisms."""

from .element import *  # noqa: F401,F403
from .element import __all__ as _element_all
from .errors import *  # noqa: F401,F403
from .errors import __all__ as _errors_all
from .metric.bounds import generator_complexity_step, lower_bound, predicted_complexity_step
from .metric.growth import ComplexityClassReport, complexity_class_witnesses, depth_family, enumerate_complexity_class
from .metric.search import BallTable, bfs_ball, free_semigroup_check, free_semigroup_count, geodesic, word_length
from .metric.synthesis import SynthesisReport, synthesis_bound, synthesize_word
from .morphisms.automorphisms import Automorphism, RayPermutation, conj_by_ray_perm
from .morphisms.commensurations import NpElement, coset_label, qi_witness, split_rays, up_index, up_member
from .morphisms.embeddings import (
    cohopf_double,
    double_preimage,
    include_rays,
    is_in_double_image,
    sigma_n,
    stabilizer_embed,
)
from .report import ExperimentReport
from .words import *  # noqa: F401,F403
from .words import __all__ as _words_all

__version__ = "0.1.0"

__all__ = list(_element_all) + list(_errors_all) + list(_words_all) + [
    "lower_bound",
    "generator_complexity_step",
    "predicted_complexity_step",
    "depth_family",
    "enumerate_complexity_class",
    "ComplexityClassReport",
    "complexity_class_witnesses",
    "BallTable",
    "bfs_ball",
    "word_length",
    "geodesic",
    "free_semigroup_check",
    "free_semigroup_count",
    "SynthesisReport",
    "synthesis_bound",
    "synthesize_word",
    "RayPermutation",
    "conj_by_ray_perm",
    "Automorphism",
    "up_member",
    "coset_label",
    "up_index",
    "split_rays",
    "NpElement",
    "qi_witness",
    "include_rays",
    "sigma_n",
    "cohopf_double",
    "double_preimage",
    "is_in_double_image",
    "stabilizer_embed",
    "ExperimentReport",
]
