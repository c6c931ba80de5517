"""Einstein gyrovector toolkit for hyperbolic Ceva, Menelaus and cevian-triangle identities."""

from .kernels import BACKEND
from .gyrocore import (
    DiscComplex,
    DomainError,
    GammaLength,
    Point,
    einstein_add,
    einstein_neg,
    einstein_scalar_mul,
    gamma,
    gyr,
    gyrodistance,
    mobius_add,
    mobius_gyr,
)
from .geometry import (
    Coincident,
    DegeneratePosition,
    GenerationError,
    GeometryError,
    GyroLine,
    GyroTriangle,
    NoIntersection,
    Scene,
    cevian_feet,
    gyroline_intersect,
    gyroline_point,
    is_gyrocollinear,
    make_scene,
    random_menelaus,
    random_scene,
)
from .theorems import (
    CheckReport,
    ProofChainReport,
    ceva_check,
    gw,
    menelaus_check,
    proof_chain_check,
    smarandache_check,
)

__version__ = "0.1.0"
