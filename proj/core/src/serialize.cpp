#include "kernelpe/serialize.hpp"

#include <json.hpp>

namespace kernelpe {

using nlohmann::json;

std::string to_json_string(const PeCertificate& cert) {
    json j;
    j["epsilon"] = cert.epsilon;
    j["theta"] = cert.theta;
    j["tau0_s"] = cert.tau0;
    j["lambda_bar"] = cert.lambda_bar;
    j["lambda_underbar"] = cert.lambda_underbar;
    j["gamma2"] = cert.gamma2;
    j["verdict"] = cert.verdict;
    j["worst_window_s"] = {cert.worst_window[0], cert.worst_window[1]};
    j["per_center_min_dwell_s"] =
        std::vector<double>(cert.per_center_min_dwell.data(),
                            cert.per_center_min_dwell.data() + cert.per_center_min_dwell.size());
    j["dwell_floor_s"] = cert.dwell_floor;
    j["window_len_s"] = cert.window_len;
    j["window_stride_s"] = cert.window_stride;
    j["start_time_s"] = cert.start_time;
    j["eig_safety"] = cert.eig_safety;
    j["n_windows"] = cert.n_windows;
    j["n_centers"] = cert.n_centers;
    j["seed"] = cert.seed;
    j["horizon_s"] = {cert.horizon[0], cert.horizon[1]};
    // The dwell bound is verified over the recorded horizon only; treating it
    // as valid for all t >= start_time is an assumption about the system.
    j["covers_observed_horizon_only"] = true;
    return j.dump(2);
}

std::string to_json_string(const BoundReport& report) {
    json j;
    j["c_hat"] = report.c_hat;
    j["phi"] = report.phi;
    if (report.c_check) j["c_check"] = *report.c_check;
    if (report.lipschitz_bound) j["lipschitz_bound"] = *report.lipschitz_bound;
    json inputs;
    inputs["n"] = report.n;
    inputs["norm_B"] = report.norm_B;
    inputs["lambda_A"] = report.lambda_A;
    inputs["lambda_bar"] = report.lambda_bar;
    inputs["norm_A"] = report.norm_A;
    inputs["vn_sup"] = report.vn_sup;
    if (report.gamma1) inputs["gamma1"] = *report.gamma1;
    if (report.delta1) inputs["delta1"] = *report.delta1;
    if (report.lipschitz_L) inputs["lipschitz_L"] = *report.lipschitz_L;
    if (report.eta) inputs["eta"] = *report.eta;
    j["inputs"] = inputs;
    return j.dump(2);
}

} // namespace kernelpe
