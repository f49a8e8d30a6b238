"""Exact tropical hypersurfaces, stable intersections and checks of the
statement that every connected component of an intersection of tropical
hypersurfaces meets their stable intersection.

Min-plus convention throughout: ``f(w) = min_a (c_a + <a, w>)``.
"""

from .complexes import (ComponentPartition, WeightedComplex, classify_projection,
                        connected_components, is_balanced, project_to_complement,
                        support_intersection)
from .errors import EmptyPolyhedronError, GenericityError, MalformedInputError, NotPureError
from .lab import (Instance, VerificationReport, check_component_conspiracy,
                  check_seed_theorem, check_translate_lemma, experiment_subset_seeding,
                  random_instance, random_sparse_instance)
from .lattice import LatticeBasis, lattice_index
from .mixed import mixed_volume, yu_conditions
from .polyhedron import (Polyhedron, dim, intersect, lp_feasible, minkowski_sum_dim,
                         relative_interior_point, translate)
from .stable import (PerturbationVector, StableCell, epsilon_feasible, stable_intersection,
                     stable_intersection_many, verify_genericity)
from .surfaces import (DualSubdivision, TropicalHypersurface, TropicalPolynomial, eval_trop,
                       hypersurface, regular_subdivision)

__version__ = "0.1.0"

__all__ = [
    "ComponentPartition",
    "WeightedComplex",
    "classify_projection",
    "connected_components",
    "is_balanced",
    "project_to_complement",
    "support_intersection",
    "EmptyPolyhedronError",
    "GenericityError",
    "MalformedInputError",
    "NotPureError",
    "Instance",
    "VerificationReport",
    "check_component_conspiracy",
    "check_seed_theorem",
    "check_translate_lemma",
    "experiment_subset_seeding",
    "random_instance",
    "random_sparse_instance",
    "LatticeBasis",
    "lattice_index",
    "mixed_volume",
    "yu_conditions",
    "Polyhedron",
    "dim",
    "intersect",
    "lp_feasible",
    "minkowski_sum_dim",
    "relative_interior_point",
    "translate",
    "PerturbationVector",
    "StableCell",
    "epsilon_feasible",
    "stable_intersection",
    "stable_intersection_many",
    "verify_genericity",
    "DualSubdivision",
    "TropicalHypersurface",
    "TropicalPolynomial",
    "eval_trop",
    "hypersurface",
    "regular_subdivision",
]
