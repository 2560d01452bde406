"""Frames on finite-dimensional complex Hilbert spaces.

Frame operators, bounds, duals, Parsevalization, polar factorizations and
the unitary-orbit structure of Parseval frames, for finite frames and for
continuous frames sampled on quadrature grids.
"""

__version__ = "0.1.0"

from .exceptions import *  # noqa: F401,F403
from .frames import (
    CoefficientVector,
    Frame,
    FrameAnalysisReport,
    FrameMatrix,
    SampledFrame,
    analysis,
    bounds_from_operator,
    canonical_dual,
    frame_bounds,
    frame_operator,
    is_parseval,
    parsevalize,
    reconstruct,
    synthesis,
)
from .generators import (
    QuadratureGrid,
    cos_sin_frame,
    exponential_frame,
    msigma_frame,
    parseval_from_unitary,
    random_frame,
    random_unitary,
    standard_basis,
    tensor_frame,
    uniform_grid,
)
from .io import emit_frame_file, parse_frame_file
from .numerics import (
    SvdResult,
    Tag,
    classify,
    eigh_psd,
    inv_sqrt_psd,
    polar,
    sqrt_psd,
    svd,
)
from .orbit import (
    Factorization,
    act,
    adjugate,
    canonical_parseval,
    connecting_operator,
    factorize,
    unitary_equivalent,
)
from .estimators import FrameAnalyzer, FrameFactorizer, Parsevalizer
