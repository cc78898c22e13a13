"""Truth-table toolkit for k-valued functions.

Represents finite functions f: Z_k^n -> Z_k as dense tables, computes
their subfunction and identification-minor reductions (separable sets,
arity gap, normal forms), builds minor decision diagrams, evaluates the
minor complexities, and classifies whole function spaces under
reduction-based equivalences and restricted affine group orbits.
"""

from .caches import clear_all as clear_caches
from .classify import (
    Partition,
    PartitionClass,
    cmr_equivalent,
    cmr_signature,
    mnr_equivalent,
    mnr_signature,
    nof_equivalent,
    nof_signature,
    partition_space,
)
from .fncore import (
    CanonicalForm,
    CatalogueCode,
    FunctionTable,
    canonical_form,
    decode,
    drop_fictive,
    encode,
    equivalent,
    essential_vars,
    evaluate,
    index_of,
)
from .groups import (
    AffineMap,
    SubgroupKind,
    apply_affine,
    apply_output,
    generators,
    orbit_of,
    orbits,
)
from .mdd import CmrCache, Mdd, Mdt, build_mdd, build_mdt, cmr, cmr_direct, to_dot
from .reductions import (
    MinorSet,
    SubfunctionSet,
    all_subfunctions,
    arity_gap,
    eq1_family,
    minor,
    minors_closure,
    nof,
    normal_form_via_chain,
    separable_sets,
    strongly_essential,
    subfunction,
)
from .rse import RseError, format_miniterms, parse
from .subodd import Implementation, OrderedDiagram, build_odd, imp_count, implementations

__version__ = "0.1.0"
