"""ringlab: a workbench for finite commutative rings.

Build small rings (modular, products, quotients, localizations, trivial
extensions, amalgamations), enumerate their ideal lattices, attach expansion
functions to ideals, classify closure properties of powers, and brute-force
check a registry of structural statements over catalogs of rings.
"""

from .errors import RinglabError
from .rings import (
    Elem,
    FiniteRing,
    RingHom,
    characteristic,
    compose_hom,
    identity_hom,
    product,
    size_bound,
    zmod,
)
from .ideals import (
    Ideal,
    IdealLattice,
    enumerate_ideals,
    ideal_algebra,
    ideal_closure,
    ideal_intersect,
    ideal_product,
    ideal_sum,
    is_maximal_ideal,
    is_prime_ideal,
    jacobson_radical,
    nilradical,
    principal_ideal,
    quotient_ring,
    radical,
    unit_ideal,
    zero_ideal,
)
from .constructions import (
    AmalgamRing,
    LocalizedRing,
    MultSet,
    ProductRing,
    RModule,
    SubringRing,
    TrivialExtension,
    amalgam_ideal,
    amalgam_ideal_parts,
    amalgamate,
    canon_hom,
    char_hom,
    duplicate,
    find_isomorphism,
    hom_ideal,
    hom_image,
    hom_preimage,
    inj_hom,
    localize,
    mult_closure,
    product_ideal,
    product_ideal_parts,
    triv_ideal,
    triv_ideal_parts,
    trivial_extension,
)
from .expansions import (
    AxiomCheck,
    ExpansionFn,
    builtin_delta,
    check_expansion_axioms,
    check_fip,
    delta_amalgam,
    delta_compose,
    delta_idealization,
    delta_localization,
    delta_product,
    delta_quotient,
    is_delta_gamma_hom,
)
from .classify import (
    classify_full,
    classify_mn,
    is_delta_primary,
    is_n_absorbing,
    is_n_absorbing_delta_primary,
    is_strongly_n_absorbing,
    unbreakable_zero_set,
)
from .parser import parse_delta, parse_ideal, parse_ring
from .catalog import Catalog, load_catalog, small_catalog
from .theorems import (
    FuzzReport,
    TheoremReport,
    fuzz,
    list_theorems,
    verify_all,
    verify_theorem,
)

__version__ = "0.1.0"
