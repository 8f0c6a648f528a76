"""Green-potential operator norms on the unit ball."""

from ballgreen._core import (  # noqa: F401
    DimensionContext,
    QuadratureSpec,
    ScalarField,
    abs_operator,
    angular_integral,
    ball_integrate,
    ball_sample,
    beta_fn,
    bracket,
    coefficient_a,
    coefficient_b,
    coefficient_e,
    conjecture_closed_forms,
    gamma_fn,
    gamma_inequality_holds,
    gauss_2f1,
    grad_operator,
    green,
    green_gradient,
    green_potential,
    h_kernel_mag,
    h_operator,
    interpolation_bound,
    kernel_integral_K,
    kernel_integral_Kswap,
    L_closed_form,
    lgamma_fn,
    majorant_c,
    majorant_c_limit,
    moebius,
    moebius_jacobian,
    n_kernel_mag,
    norm_inf_estimate,
    norm_l1_estimate,
    pochhammer,
    poisson_extension,
    poisson_kernel,
    registry_names,
    riesz_potential,
    run_check,
    series_J_lemma,
    series_J_theorem,
    sphere_area,
    sphere_integral_reduced,
    sphere_sample,
)

__version__ = "1.0.0"
