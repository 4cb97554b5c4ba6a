#include "kernelpe/bounds.hpp"

#include <cmath>

#include "kernelpe/errors.hpp"

namespace kernelpe {

BoundReport ultimate_bounds(int n, double norm_B, double lambda_A, double lambda_bar,
                            double norm_A, double vn_sup, std::optional<Pe1Constants> pe1) {
    if (!(lambda_A > 0.0)) {
        throw input_error("ultimate_bounds: lambda_A must be positive");
    }
    if (n < 1 || !(norm_B > 0.0) || !(lambda_bar > 0.0) || norm_A < 0.0 || vn_sup < 0.0) {
        throw input_error("ultimate_bounds: invalid inputs");
    }

    BoundReport r;
    r.n = n;
    r.norm_B = norm_B;
    r.lambda_A = lambda_A;
    r.lambda_bar = lambda_bar;
    r.norm_A = norm_A;
    r.vn_sup = vn_sup;

    r.c_hat = norm_B * std::sqrt(lambda_bar * n) / lambda_A;
    r.phi = norm_B * vn_sup / lambda_A;

    if (pe1) {
        if (!(pe1->gamma1 > 0.0) || !(pe1->delta1 > 0.0)) {
            throw input_error("ultimate_bounds: PE-1 constants must be positive");
        }
        r.gamma1 = pe1->gamma1;
        r.delta1 = pe1->delta1;
        r.c_check = ((2.0 + norm_A * pe1->delta1) * r.c_hat + pe1->delta1 * norm_B) /
                    (pe1->gamma1 * norm_B);
    }
    return r;
}

double lipschitz_bound(double c_check, double L, double eta) {
    if (!(c_check > 0.0) || !(L > 0.0) || eta < 0.0) {
        throw input_error("lipschitz_bound: inputs must be positive (eta nonnegative)");
    }
    return c_check * L * eta;
}

} // namespace kernelpe
