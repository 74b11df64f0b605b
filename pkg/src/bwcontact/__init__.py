"""Classification of Boothby-Wang contact structures on simply connected
5-manifolds: diffeomorphism type, level, generator-degree spectra, algebra
isomorphism decisions, and counting bounds from symplectic geography."""

from .lattice import (
    AdaptedBasis,
    NotIndivisibleError,
    complete_to_basis,
    divisibility,
    dot,
    kernel_basis,
    quotient_divisibility,
    solve_unit,
)
from .manifolds import (
    DescriptorError,
    FiveManifoldContact,
    SymplecticFourManifold,
    almost_contact_equivalent,
    barden_sum_name,
    boothby_wang,
    descriptor_from_dict,
    diffeomorphic,
    load_descriptor,
    validate,
)
from .algebra import (
    DegreeSpectrum,
    GeneratorIndex,
    QbStatus,
    ResidueClassTable,
    deg_delta_i,
    deg_q,
    qb_members_bruteforce,
    qb_status,
    residue_table,
    spectrum,
)
from .isomorphism import (
    Decision,
    IsomorphismReport,
    WitnessConsistencyError,
    WitnessEntry,
    build_witness,
    decide,
)
from .geography import (
    Catalog,
    CountReport,
    GeographyEntry,
    Q_lower_bound,
    Q_upper_bound,
    RealizedLevel,
    catalog_realizable,
    contact_count_report,
    count_N,
    count_N_prime,
    realize_level,
)

__version__ = "0.1.0"

__all__ = [
    "AdaptedBasis",
    "Catalog",
    "CountReport",
    "Decision",
    "DegreeSpectrum",
    "DescriptorError",
    "FiveManifoldContact",
    "GeneratorIndex",
    "GeographyEntry",
    "IsomorphismReport",
    "NotIndivisibleError",
    "QbStatus",
    "Q_lower_bound",
    "Q_upper_bound",
    "RealizedLevel",
    "ResidueClassTable",
    "SymplecticFourManifold",
    "WitnessConsistencyError",
    "WitnessEntry",
    "almost_contact_equivalent",
    "barden_sum_name",
    "boothby_wang",
    "build_witness",
    "catalog_realizable",
    "complete_to_basis",
    "contact_count_report",
    "count_N",
    "count_N_prime",
    "decide",
    "deg_delta_i",
    "deg_q",
    "descriptor_from_dict",
    "diffeomorphic",
    "divisibility",
    "dot",
    "kernel_basis",
    "load_descriptor",
    "qb_members_bruteforce",
    "qb_status",
    "quotient_divisibility",
    "realize_level",
    "residue_table",
    "solve_unit",
    "spectrum",
    "validate",
    "__version__",
]
