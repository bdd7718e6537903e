#pragma once

#include <string_view>

#include "qgas/special_functions.hpp"

namespace qgas {

/// Constants of the unit system. All momenta, temperatures and volumes in
/// this library are pure numbers in these units; the defaults hbar = m = k = 1
/// are the convention under which the momentum thresholds are dimensionless.
struct NaturalUnits {
    double hbar = 1.0;
    double mass = 1.0;
    double boltzmann = 1.0;

    void validate() const;
};

/// Thermodynamic bundle of a gas whose momentum distribution is concentrated
/// at a single p0. kT = p0^2 / 2m and beta*eps = 1 are taken as exact.
struct MonoEnergeticState {
    double p0;
    double temperature;
    double lambda; ///< thermal wavelength (4 pi)^{1/2} hbar / p0
    double beta_eps;
};

/// z, z' = lambda^3 / v and b = z'/z.
struct FugacityPair {
    double z;
    double z_prime;
    double b;
};

/// N particles in volume V, v = V/N.
struct NormalizationScenario {
    double total_count;
    double volume;
    double specific_volume;

    static NormalizationScenario from_count_and_volume(double total_count, double volume);
};

/// Which order-3/2 function stands in for z'.
enum class SeriesBranch { Bose, FermiFull, FermiTruncated };

std::string_view to_string(SeriesBranch branch);

/// g_{3/2}, full f_{3/2} or three-term f_{3/2}, chosen by branch.
double branch_series(SeriesBranch branch, Fugacity z, const SeriesParams& params = {});

/// 1 / (z^{-1} e^{beta_eps} - 1). Throws SingularityError when the
/// denominator is <= 0 (z = 1, beta_eps = 0), DomainError for z outside [0,1]
/// or beta_eps < 0.
double occupation_bose(double z, double beta_eps);

/// 1 / (z^{-1} e^{beta_eps} + 1), in [0, 1). DomainError for z < 0.
double occupation_fermi(double z, double beta_eps);

MonoEnergeticState mono_energetic_state(double p0, const NaturalUnits& units = {});

/// (2 pi hbar^2 / (m k T))^{1/2}.
double thermal_wavelength(double temperature, const NaturalUnits& units = {});

/// lambda^3 / v.
double reduced_fugacity(double lambda, double specific_volume);

/// z'/z for the given branch at 0 < z <= 1. The z -> 0 limit is 1 on every
/// branch and is not returned here (DomainError at z = 0).
double b_factor(double z, SeriesBranch branch, const SeriesParams& params = {});

/// The pair (z, series(z), series(z)/z), with zero condensate fraction on the
/// Bose branch. At z = 0 the pair is (0, 0, 1).
FugacityPair fugacity_pair(double z, SeriesBranch branch, const SeriesParams& params = {});

/// Specific volume for which 1 = (4 pi v p0^2 / hbar^3) <n_{p0}> holds with
/// beta*eps = 1, i.e. v = (z^{-1} e - 1) hbar^3 / (4 pi p0^2).
double specific_volume_from_constraint(double p0, double z, const NaturalUnits& units = {});

} // namespace qgas
