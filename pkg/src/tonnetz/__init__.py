"""Generalized Tonnetz complexes Tonn^{n,k}(L).

Construction and face enumeration live in :mod:`tonnetz.core`, links and
homology in :mod:`tonnetz.topology`, cocycles and edge words in
:mod:`tonnetz.chains`, the permutohedral lattice and quotients in
:mod:`tonnetz.lattice`, and invariants/isomorphism in :mod:`tonnetz.analysis`.
"""
from tonnetz.analysis import classify, enumerate_generic, invariants, is_isomorphic
from tonnetz.chains import (
    Chain,
    EdgeWord,
    atom_decomposition,
    canonical_cycle,
    edge_l_type,
    homology_normal_form,
    omega,
    pairing_matrix,
    theta,
)
from tonnetz.core import (
    LengthVector,
    SimplicialComplex,
    TonnetzComplex,
    build_complex,
    components_of_scaled,
    facet,
    length_vector,
    stirling_f_vector,
    validate,
)
from tonnetz.errors import (
    FaceNotInComplex,
    LabelCollision,
    NoType,
    NotClosed,
    NotGeneric,
    NotReduced,
    SumMismatch,
    TonnetzError,
    UnsupportedK,
)
from tonnetz.kernels import BACKEND
from tonnetz.lattice import (
    a_vector,
    delone_star,
    h1_lattice,
    irrational_patch,
    lambda_L,
    quotient_complex,
    shortest_vector,
    verify_main_theorem,
)
from tonnetz.topology import (
    connected_components,
    link,
    link_join_profile,
    simplicial_homology,
    verify_manifold,
)

__version__ = "0.1.0"
