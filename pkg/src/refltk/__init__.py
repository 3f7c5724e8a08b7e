"""Exact computations with finite orthogonal reflection groups.

Groups are enumerated exactly over Q or a real quadratic field Q(sqrt d).
On top of the element list sit root systems, isotropy and inertia groups,
maximal elementary abelian 2-subgroups generated by reflections, and
Molien series of the invariant ring.
"""

from .classify import (classify_up_to_conjugacy, commutation_graph, maximal_elementary_2subgroups,
                       normalizer_action, splitting_report)
from .coxeter import named_weyl, weyl_group
from .errors import *  # noqa: F401,F403
from .field import QQ, Field, Scalar
from .groups import (GroupElement, Reflection, ReflectionGroup, Subgroup, close_group,
                     conjugacy_classes, reflection)
from .invariants import (extract_degrees, molien_series, reynolds_project,
                         verify_degree_identities, verify_g_delta_in_invariant_ring)
from .linalg import BilinearSpace, Subspace
from .polynomial import LinearForm, LinearProduct, Polynomial
from .roots import RootSystem, build_root_system, g_delta, g_delta_factored, verify_axioms
from .spec_io import GroupSpec, parse_group_spec, serialize_group_spec
from .stabilizers import (inertia, is_generated_by_contained_reflections, isotropy,
                          verify_fixed_locus_equality, verify_inertia_decomposition)

__version__ = "0.1.0"
