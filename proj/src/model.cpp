#include "instanton/model.hpp"

namespace instanton {

double potential(const DoubleWellParams& p, double x) {
    const double a = p.a();
    const double u = x - a;
    const double v = x + a;
    return p.mass * p.omega * p.omega / (4.0 * a * a) * u * u * v * v;
}

double d_potential(const DoubleWellParams& p, double x) {
    return p.delta * x * x * x - p.mass * p.omega * p.omega * x;
}

double dd_potential(const DoubleWellParams& p, double x) {
    const double a2 = p.mass * p.omega * p.omega / p.delta;
    return p.mass * p.omega * p.omega * (3.0 * x * x / a2 - 1.0);
}

double temperature_to_size(const DoubleWellParams& p, double T, double kB) {
    if (!(T > 0.0))
        throw std::domain_error("temperature_to_size: T must be positive");
    return p.hbar / (kB * T);
}

} // namespace instanton
