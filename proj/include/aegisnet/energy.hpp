#pragma once

#include <cmath>
#include <cstdint>

namespace aegisnet {

/// First-order radio model constants (LEACH-family defaults).
struct EnergyParams {
    double e_elec = 50e-9;    // J/bit, electronics
    double eps_fs = 10e-12;   // J/bit/m^2, free-space amplifier
    double eps_mp = 1.3e-15;  // J/bit/m^4, multipath amplifier
    double e_da = 5e-9;       // J/bit, aggregation cost
    double initial_j = 0.5;
    double death_threshold_j = 0.0;

    bool operator==(const EnergyParams&) const = default;

    double d0_m() const { return std::sqrt(eps_fs / eps_mp); }
};

/// e_elec*bits + eps_fs*bits*d^2 below the crossover distance, else
/// e_elec*bits + eps_mp*bits*d^4.
double tx_energy(const EnergyParams& params, std::uint64_t bits, double distance_m);

/// e_elec*bits.
double rx_energy(const EnergyParams& params, std::uint64_t bits);

/// Internal energy bookkeeping is integer femtojoules so the ledger
/// reconciles exactly.
std::int64_t to_femtojoules(double joules);
double to_joules(std::int64_t femtojoules);

}  // namespace aegisnet
