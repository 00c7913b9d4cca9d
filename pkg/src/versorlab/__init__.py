"""versorlab: a small laboratory for Clifford-algebra group theory.

Dense multivector arithmetic over Cl(p,q) with p+q <= 8, reflection-generated
root systems with Cartan matrices and Coxeter diagrams, Pin/Spin versor groups
with conjugacy structure, spinor-induced 4D root systems, binary polyhedral
representation numerology, and the 2D conformal model carrying the modular
group.
"""

from .algebra import (
    DEFAULT_EPS,
    HASH_GRID,
    Multivector,
    Signature,
    Versor,
    basis,
    blade,
    exp_bivector,
    geometric_product,
    grade_project,
    mv_from_json,
    reflect,
    reverse,
    sandwich,
    scalar_mv,
    vector,
)
from .cga2d import (
    CGA_SIG,
    EMINUS,
    EPLUS,
    NBAR,
    NINF,
    ConformalPoint,
    ConformalVersor,
    ModularWord,
    apply_word,
    dilator,
    embed,
    extract,
    inversion_versor,
    mobius_oracle,
    modular_S,
    modular_T,
    reflection,
    rotation,
    special_conformal,
    translator,
    word_report,
)
from .errors import (
    AmbiguousIrrepDims,
    ClosureCapExceeded,
    McKayMismatch,
    NotAVersor,
    PointAtInfinity,
    SignatureMismatch,
    SymmetrySweepFailure,
    UnknownCatalogName,
    VersorlabError,
)
from .groups import (
    ConjugacyClass,
    ExpDecomposition,
    ExpTerm,
    QuotientGroup,
    VersorGroup,
    conjugacy_classes,
    coxeter_number,
    element_order,
    exp_decomposition,
    generate_pin,
    generate_spin,
    group_table_dict,
    quotient_by_sign,
)
from .induction import (
    AutomorphismSweep,
    InducedRootSystem4D,
    ReflectionAgreement,
    identify_4d,
    induce_4d,
    reflection_agreement,
    reflection_closure_witness,
    spinor_coords,
    spinor_inner,
    spinorial_automorphisms,
)
from .mckay import (
    IrrepDims,
    McKayRow,
    abelianization_order,
    cayley_table,
    irrep_dimensions,
    mckay_table,
)
from .roots import (
    AxiomReport,
    CartanMatrix,
    DiagramEdge,
    RootSystem,
    cartan_matrix,
    catalog,
    catalog_names,
    check_axioms,
    close_roots,
    diagram,
    rootsystem_from_dict,
    rootsystem_to_dict,
)
from .verify import BatteryReport, CheckResult, run_battery

__version__ = "0.1.0"
