#include "instanton/report_json.hpp"

namespace instanton {

nlohmann::json to_json(const TunnelingReport& r) {
    nlohmann::json j{
        {"L", r.L},
        {"temperature", r.temperature},
        {"E", r.E},
        {"kappa", r.kappa},
        {"s_squared", r.s_squared},
        {"action", r.action},
        {"zero_mode_norm_sq", r.zero_mode_norm_sq},
        {"det_ratio", r.det_ratio},
        {"det_ratio_spectral", r.det_ratio_spectral},
        {"det_ratio_gy", r.det_ratio_gy},
        {"harmonic_det", r.harmonic_det},
        {"omega_qf", r.omega_qf},
        {"omega_tunnel", r.omega_tunnel},
        {"amplitude", r.amplitude},
        {"asymptotic_background", r.asymptotic_background},
        {"validity_warning", r.validity_warning},
        {"convention", r.convention},
    };
    j["ledger"] = r.ledger;
    return j;
}

} // namespace instanton
