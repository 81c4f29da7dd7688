"""Random real symmetric block matrices: construction, empirical
spectra, exact limiting moments, and trace-inequality checks."""

__version__ = "0.1.0"

from .bounds import (
    CounterexampleReport,
    ExponentVector,
    HolderCheck,
    MixedTraceCheck,
    SandwichCheck,
    SingularSpectrum,
    conjecture_counterexample,
    conjecture_moment_scan,
    holder_sweep,
    holder_trace_check,
    mixed_trace_bound_check,
    sandwich_bound_check,
    schatten_norm,
)
from .disco import (
    DiscoDecomposition,
    DiscoPlan,
    assemble_disco,
    build_disco,
    decompose,
    draw_components,
    hat_decompose,
    kronecker,
)
from .ensembles import (
    EnsembleKind,
    EnsembleSpec,
    EntryDistribution,
    SymmetricMatrix,
    draw,
    free_parameter_count,
)
from .limit_moments import (
    BoundCheck,
    ChordDiagram,
    ExactMoment,
    PlaneTreeDual,
    bound_suite,
    canonical_class_contribution,
    class_contribution_via_trees,
    class_table,
    exact_moment,
    exact_moment_via_trees,
    gaussian_moment,
    legal_pairings,
    p_alpha_beta,
    semicircle_moment,
    word_class_moment,
)
from .pairings import (
    COMPILED_AVAILABLE,
    IMPLEMENTATION,
    legal_pairing_count,
    word_class_sum,
)
from .spectra import (
    Histogram,
    MomentReport,
    SpectralSample,
    draw_target,
    eigenvalues,
    empirical_moments,
    gap_spacings,
    histogram,
    monte_carlo_moments,
    moment_variance_scan,
    odd_moment_decay,
    pooled_normalized,
)

__all__ = [
    "BoundCheck",
    "ChordDiagram",
    "COMPILED_AVAILABLE",
    "CounterexampleReport",
    "DiscoDecomposition",
    "DiscoPlan",
    "EnsembleKind",
    "EnsembleSpec",
    "EntryDistribution",
    "ExactMoment",
    "ExponentVector",
    "Histogram",
    "HolderCheck",
    "IMPLEMENTATION",
    "MixedTraceCheck",
    "MomentReport",
    "PlaneTreeDual",
    "SandwichCheck",
    "SingularSpectrum",
    "SpectralSample",
    "SymmetricMatrix",
    "assemble_disco",
    "bound_suite",
    "build_disco",
    "canonical_class_contribution",
    "class_contribution_via_trees",
    "class_table",
    "conjecture_counterexample",
    "conjecture_moment_scan",
    "decompose",
    "draw",
    "draw_components",
    "draw_target",
    "eigenvalues",
    "empirical_moments",
    "exact_moment",
    "exact_moment_via_trees",
    "free_parameter_count",
    "gap_spacings",
    "gaussian_moment",
    "hat_decompose",
    "histogram",
    "holder_sweep",
    "holder_trace_check",
    "kronecker",
    "legal_pairing_count",
    "legal_pairings",
    "mixed_trace_bound_check",
    "moment_variance_scan",
    "monte_carlo_moments",
    "odd_moment_decay",
    "pooled_normalized",
    "p_alpha_beta",
    "sandwich_bound_check",
    "schatten_norm",
    "semicircle_moment",
    "word_class_moment",
    "word_class_sum",
]
