"""Periodic Levy noise simulation and wavelet n-term compressibility measurement."""

__version__ = "0.1.0"

from .exponents import (
    BGIndices,
    CompoundPoisson,
    DiracJump,
    Gaussian,
    GaussianJump,
    InverseGaussian,
    KappaPrediction,
    Laplace,
    ParameterError,
    SAlphaS,
    UniformJump,
    bg_indices,
    check_besov_membership_prediction,
    psi_eval,
    theoretical_kappa,
)
from .sampling import (
    GridSpec,
    NoiseField,
    generate_noise,
    make_rng,
    read_field_dump,
    sample_id_increment,
    trial_seed,
    write_field_dump,
)
from .spectral import (
    AdmissibilityError,
    Derivative1d,
    FractionalLaplacian,
    Matern,
    SpectralField,
    apply_forward_operator,
    apply_inverse_operator,
    forward_fft,
    inverse_fft,
    synthesize_process,
)
from .wavelets import (
    WaveletCoeffs,
    WaveletSpec,
    coeff_iter,
    daubechies_lowpass,
    dwt_periodic,
    export_coeffs_csv,
    idwt_periodic,
    quadrature_mirror_highpass,
)
from .besov import (
    BesovParams,
    DecayCurve,
    KappaFit,
    besov_seq_norm,
    best_n_term,
    empirical_regularity_scan,
    estimate_kappa,
    sigma_curve,
    weighted_magnitudes,
)
from .harness import (
    ComparisonReport,
    ConfigError,
    ExperimentConfig,
    ExperimentReport,
    compare_families,
    emit_outputs,
    load_config,
    parse_config,
    run_experiment,
    selftest,
)
