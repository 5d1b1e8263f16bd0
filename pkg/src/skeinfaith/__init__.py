"""Exact computations in the associated graded Kauffman bracket skein algebra
of a closed surface and its action on the handlebody skein module."""

from .faithful import (
    Certificate,
    ChebyshevWitness,
    KernelWitness,
    chebyshev_witness,
    find_probe,
    injectivity_certificate,
    kernel_witness,
    verify_tn_loop_identity,
)
from .graded import (
    GradedHandlebodyElem,
    GradedSurfaceElem,
    NotTriangularError,
    act,
    act_basis,
    coordinate_stabilize,
    product,
    product_basis,
    single_twist_reduce,
    twist_reduce,
    unit_u,
)
from .qring import CyclotomicElem, IntPoly, LaurentPoly, RingCtx, RingMismatchError, chebyshev, eval_poly, specialize
from .surface import (
    CoordinateError,
    DTCoord,
    Triangulation,
    TriangulationError,
    compute_thurston_form,
    count_components,
    embed_edgecoord,
    gamma_member,
    is_triangular,
    lambda_member,
    normal_reconstruct,
    omega,
    pairing_q,
    preset,
    twist,
)

__version__ = "0.1.0"
