"""Coalesce modules package."""
from .errors import (
    CoalesceError,
    ConfigError,
    GraphError,
    OrderTooSmall,
    InvalidVertex,
    EmptyGraph,
    SelfLoop,
    DuplicateEdge,
    ParseError,
    Disconnected,
    CoalescenceError,
    NotAClique,
    SizeMismatch,
    SearchError,
    BudgetExceeded,
    SpectralError,
    NotSquare,
    ConvergenceFailure,
    ParamOutOfRange,
    ZeroDegreeMergeVertex,
)
from .config import load_config, get_default_config, apply_environment, validate_config
from .graph import (
    Graph,
    Family,
    FamilyKind,
    DegreeProfile,
    generate,
    is_clique,
    find_clique,
    degree_profile,
    parse_graph,
    serialize_graph,
)
from .polynomial import RationalPolynomial, char_poly, real_roots
from .coalescence import CliqueSpec, CoalescenceRecord, CoalescenceFamily, coalesce, build_family
from .structural import (
    SearchLimits,
    StructureReport,
    CoalescencePrediction,
    girth,
    exact_invariants,
    is_eulerian,
    is_hamiltonian,
    structure_report,
    predict,
    check_propositions,
)
from .spectra import (
    SpectrumReport,
    ClosedFormEnergyTerms,
    aalpha_matrix,
    eigenvalues,
    energy,
    decomposition_rhs,
    identity_check,
    adjacency_corollary_rhs,
    complete_closed_form,
    complete_spectrum,
    energy_corollary,
    lollipop_recursion,
)
from .indices import (
    DistanceTable,
    IndexReport,
    distance_table,
    wiener,
    hyper_wiener,
    forgotten,
    first_zagreb,
    narumi_katayama,
    index_report,
    vertex_composition,
    family_closed_form,
    closed_form_audit,
    composition_audit,
)
from .utils import VerificationRow, PASS, FAIL, SKIPPED, REFUTED

__all__ = [
    'CoalesceError',
    'ConfigError',
    'GraphError',
    'OrderTooSmall',
    'InvalidVertex',
    'EmptyGraph',
    'SelfLoop',
    'DuplicateEdge',
    'ParseError',
    'Disconnected',
    'CoalescenceError',
    'NotAClique',
    'SizeMismatch',
    'SearchError',
    'BudgetExceeded',
    'SpectralError',
    'NotSquare',
    'ConvergenceFailure',
    'ParamOutOfRange',
    'ZeroDegreeMergeVertex',
    'load_config',
    'get_default_config',
    'apply_environment',
    'validate_config',
    'Graph',
    'Family',
    'FamilyKind',
    'DegreeProfile',
    'generate',
    'is_clique',
    'find_clique',
    'degree_profile',
    'parse_graph',
    'serialize_graph',
    'RationalPolynomial',
    'char_poly',
    'real_roots',
    'CliqueSpec',
    'CoalescenceRecord',
    'CoalescenceFamily',
    'coalesce',
    'build_family',
    'SearchLimits',
    'StructureReport',
    'CoalescencePrediction',
    'girth',
    'exact_invariants',
    'is_eulerian',
    'is_hamiltonian',
    'structure_report',
    'predict',
    'check_propositions',
    'SpectrumReport',
    'ClosedFormEnergyTerms',
    'aalpha_matrix',
    'eigenvalues',
    'energy',
    'decomposition_rhs',
    'identity_check',
    'adjacency_corollary_rhs',
    'complete_closed_form',
    'complete_spectrum',
    'energy_corollary',
    'lollipop_recursion',
    'DistanceTable',
    'IndexReport',
    'distance_table',
    'wiener',
    'hyper_wiener',
    'forgotten',
    'first_zagreb',
    'narumi_katayama',
    'index_report',
    'vertex_composition',
    'family_closed_form',
    'closed_form_audit',
    'composition_audit',
    'VerificationRow',
    'PASS',
    'FAIL',
    'SKIPPED',
    'REFUTED',
]
