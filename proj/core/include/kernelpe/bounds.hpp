#pragma once

#include <optional>

namespace kernelpe {

/// PE constants of the integral (type-1) excitation definition. These are not
/// derivable from the sufficient-condition check and must be supplied.
struct Pe1Constants {
    double gamma1 = 0.0;
    double delta1 = 0.0;
};

/// Ultimate-bound constants for the dead-zone estimator.
///   c_hat = ||B|| sqrt(lambda_bar * n) / lambda_A
///   phi   = ||B|| * vn_sup / lambda_A
///   c_check = ((2 + ||A|| delta1) c_hat + delta1 ||B||) / (gamma1 ||B||)
/// c_check (and anything built on it) is present only when the PE-1 constants
/// were supplied.
struct BoundReport {
    double c_hat = 0.0;
    double phi = 0.0;
    std::optional<double> c_check;
    std::optional<double> lipschitz_bound;

    // Inputs echoed for auditability.
    int n = 0;
    double norm_B = 0.0;
    double lambda_A = 0.0;
    double lambda_bar = 0.0;
    double norm_A = 0.0;
    double vn_sup = 0.0;
    std::optional<double> gamma1;
    std::optional<double> delta1;
    std::optional<double> lipschitz_L;
    std::optional<double> eta;
};

BoundReport ultimate_bounds(int n, double norm_B, double lambda_A, double lambda_bar,
                            double norm_A, double vn_sup,
                            std::optional<Pe1Constants> pe1 = std::nullopt);

/// Corollary bound c_check * L * eta on the asymptotic coefficient error when
/// the complementary component is L-Lipschitz and the visited set is covered
/// by eta-balls around the centers.
double lipschitz_bound(double c_check, double L, double eta);

} // namespace kernelpe
