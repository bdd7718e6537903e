#include "qgas/gas_statistics.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qgas/errors.hpp"

namespace qgas {

namespace {

std::string num(double x) { return std::to_string(x); }

} // namespace

void NaturalUnits::validate() const {
    if (!(hbar > 0.0 && mass > 0.0 && boltzmann > 0.0)) {
        throw DomainError("NaturalUnits: hbar, mass and boltzmann must be > 0");
    }
}

NormalizationScenario NormalizationScenario::from_count_and_volume(double total_count,
                                                                   double volume) {
    if (!(total_count > 0.0) || !(volume > 0.0)) {
        throw DomainError("NormalizationScenario: N and V must be > 0");
    }
    return {total_count, volume, volume / total_count};
}

std::string_view to_string(SeriesBranch branch) {
    switch (branch) {
    case SeriesBranch::Bose: return "bose";
    case SeriesBranch::FermiFull: return "fermi-full";
    case SeriesBranch::FermiTruncated: return "fermi-truncated";
    }
    return "?";
}

double branch_series(SeriesBranch branch, Fugacity z, const SeriesParams& params) {
    switch (branch) {
    case SeriesBranch::Bose: return bose_g32(z, params);
    case SeriesBranch::FermiFull: return fermi_f32_full(z, params);
    case SeriesBranch::FermiTruncated: return fermi_f32_truncated(z);
    }
    throw DomainError("branch_series: unknown branch");
}

double occupation_bose(double z, double beta_eps) {
    if (!(z >= 0.0 && z <= 1.0)) throw DomainError("occupation_bose: z must lie in [0, 1], got " + num(z));
    if (!(beta_eps >= 0.0)) throw DomainError("occupation_bose: beta_eps must be >= 0, got " + num(beta_eps));
    if (z == 0.0) return 0.0;
    // z^{-1} e^{x} - 1 = expm1(x - ln z)
    const double denom = std::expm1(beta_eps - std::log(z));
    if (!(denom > 0.0)) {
        throw SingularityError("occupation_bose: condensation singularity at z = " + num(z) +
                                   ", beta_eps = " + num(beta_eps),
                               z, beta_eps);
    }
    return 1.0 / denom;
}

double occupation_fermi(double z, double beta_eps) {
    if (!(z >= 0.0)) throw DomainError("occupation_fermi: z must be >= 0, got " + num(z));
    if (std::isnan(beta_eps)) throw DomainError("occupation_fermi: beta_eps is NaN");
    if (z == 0.0) return 0.0;
    return 1.0 / (std::exp(beta_eps) / z + 1.0);
}

MonoEnergeticState mono_energetic_state(double p0, const NaturalUnits& units) {
    units.validate();
    if (!(p0 > 0.0)) throw DomainError("mono_energetic_state: p0 must be > 0, got " + num(p0));
    const double temperature = p0 * p0 / (2.0 * units.mass * units.boltzmann);
    const double lambda = 2.0 * std::sqrt(std::numbers::pi) * units.hbar / p0;
    return {p0, temperature, lambda, 1.0};
}

double thermal_wavelength(double temperature, const NaturalUnits& units) {
    units.validate();
    if (!(temperature > 0.0)) throw DomainError("thermal_wavelength: temperature must be > 0");
    return std::sqrt(2.0 * std::numbers::pi * units.hbar * units.hbar /
                     (units.mass * units.boltzmann * temperature));
}

double reduced_fugacity(double lambda, double specific_volume) {
    if (!(lambda > 0.0) || !(specific_volume > 0.0)) {
        throw DomainError("reduced_fugacity: lambda and v must be > 0");
    }
    return lambda * lambda * lambda / specific_volume;
}

double b_factor(double z, SeriesBranch branch, const SeriesParams& params) {
    if (!(z > 0.0 && z <= 1.0)) {
        throw DomainError("b_factor: z must lie in (0, 1], got " + num(z) +
                          " (the z -> 0 limit is b = 1)");
    }
    return branch_series(branch, Fugacity(z), params) / z;
}

FugacityPair fugacity_pair(double z, SeriesBranch branch, const SeriesParams& params) {
    if (z == 0.0) return {0.0, 0.0, 1.0};
    const double z_prime = branch_series(branch, Fugacity(z), params);
    return {z, z_prime, z_prime / z};
}

double specific_volume_from_constraint(double p0, double z, const NaturalUnits& units) {
    units.validate();
    if (!(p0 > 0.0)) throw DomainError("specific_volume_from_constraint: p0 must be > 0");
    if (!(z > 0.0)) throw DomainError("specific_volume_from_constraint: z must be > 0");
    const double excess = std::expm1(1.0 - std::log(z));
    if (!(excess > 0.0)) {
        throw DomainError("specific_volume_from_constraint: z^{-1} e - 1 <= 0 for z = " + num(z));
    }
    const double h3 = units.hbar * units.hbar * units.hbar;
    return excess * h3 / (4.0 * std::numbers::pi * p0 * p0);
}

} // namespace qgas
