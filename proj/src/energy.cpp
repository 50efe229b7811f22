#include "aegisnet/energy.hpp"

namespace aegisnet {

double tx_energy(const EnergyParams& params, std::uint64_t bits, double distance_m) {
    const double b = static_cast<double>(bits);
    if (distance_m < params.d0_m()) {
        return params.e_elec * b + params.eps_fs * b * distance_m * distance_m;
    }
    const double d2 = distance_m * distance_m;
    return params.e_elec * b + params.eps_mp * b * d2 * d2;
}

double rx_energy(const EnergyParams& params, std::uint64_t bits) {
    return params.e_elec * static_cast<double>(bits);
}

std::int64_t to_femtojoules(double joules) {
    return static_cast<std::int64_t>(std::llround(joules * 1e15));
}

double to_joules(std::int64_t femtojoules) { return static_cast<double>(femtojoules) * 1e-15; }

}  // namespace aegisnet
