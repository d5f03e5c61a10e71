"""Finite orthomodular lattices, their centers, and the idempotent right-sided
quantales induced by closure endomorphisms."""

__version__ = "0.1.0"

from .catalog import boolean_algebra, g12, hexagon_spec, mo, product
from .correspondence import (
    CorrespondenceReport,
    check_bvb,
    endo_from_subalgebra,
    enumerate_bvb_endos,
    enumerate_central_boolean_subalgebras,
    fixed_points,
    verify_correspondence,
)
from .errors import (
    IndexOutOfRange,
    InputError,
    IoError,
    MalformedInput,
    NotALattice,
    NotAPoset,
    NotCentralSubalgebra,
    NotOrthomodular,
    NotOrtholattice,
    PreconditionViolated,
    SizeLimitExceeded,
)
from .lattice import (
    Endomap,
    LatticeSpec,
    OmlTable,
    ValidationReport,
    bound_of,
    build_lattice,
    validate_oml,
)
from .limits import SizeLimits
from .logic import (
    Sublattice,
    center,
    central_cover,
    central_cover_endo,
    compatible,
    finch_and,
    sasaki_hook,
)
from .quantale import (
    QuantaleTable,
    check_quantale_axioms,
    fixed_point_locale_check,
    quantale_from_endo,
)
from .serialize import parse_lattice_file

__all__ = [
    "__version__",
    "boolean_algebra",
    "g12",
    "hexagon_spec",
    "mo",
    "product",
    "CorrespondenceReport",
    "check_bvb",
    "endo_from_subalgebra",
    "enumerate_bvb_endos",
    "enumerate_central_boolean_subalgebras",
    "fixed_points",
    "verify_correspondence",
    "IndexOutOfRange",
    "InputError",
    "IoError",
    "MalformedInput",
    "NotALattice",
    "NotAPoset",
    "NotCentralSubalgebra",
    "NotOrthomodular",
    "NotOrtholattice",
    "PreconditionViolated",
    "SizeLimitExceeded",
    "Endomap",
    "LatticeSpec",
    "OmlTable",
    "ValidationReport",
    "bound_of",
    "build_lattice",
    "validate_oml",
    "SizeLimits",
    "Sublattice",
    "center",
    "central_cover",
    "central_cover_endo",
    "compatible",
    "finch_and",
    "sasaki_hook",
    "QuantaleTable",
    "check_quantale_axioms",
    "fixed_point_locale_check",
    "quantale_from_endo",
    "parse_lattice_file",
]
