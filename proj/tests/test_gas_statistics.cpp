#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "qgas/errors.hpp"
#include "qgas/gas_statistics.hpp"
#include "qgas/regime.hpp"

using namespace qgas;

namespace {
constexpr double kE = std::numbers::e;
constexpr double kPi = std::numbers::pi;
} // namespace

TEST_CASE("occupation_bose") {
    CHECK(occupation_bose(0.5, 0.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(std::abs(occupation_bose(1.0, 1.0) - 0.581977) < 1e-6);
    CHECK(std::abs(occupation_bose(1.0, 1.0) - 1.0 / (kE - 1.0)) < 1e-15);
    CHECK(occupation_bose(0.0, 1.0) == 0.0);
    CHECK(occupation_bose(1e-3, 0.0) > 0.0);

    CHECK_THROWS_AS(occupation_bose(1.0, 0.0), SingularityError);
    try {
        occupation_bose(1.0, 0.0);
    } catch (const SingularityError& e) {
        CHECK(e.z() == 1.0);
        CHECK(e.beta_eps() == 0.0);
    }
    CHECK_THROWS_AS(occupation_bose(1.5, 1.0), DomainError);
    CHECK_THROWS_AS(occupation_bose(-0.1, 1.0), DomainError);
    CHECK_THROWS_AS(occupation_bose(0.5, -1.0), DomainError);
}

TEST_CASE("occupation_bose diverges towards the condensation point") {
    for (int n = 1; n <= 12; ++n) {
        const double beta_eps = std::pow(10.0, -n);
        CAPTURE(n);
        CHECK(occupation_bose(1.0, beta_eps) > std::pow(10.0, n) - 1.0);
    }
}

TEST_CASE("occupation_fermi") {
    CHECK(occupation_fermi(1.0, 0.0) == 0.5);
    CHECK(std::abs(occupation_fermi(1.0, 1.0) - 0.268941) < 1e-6);
    CHECK(std::abs(occupation_fermi(0.5, 1.0) - 0.155362) < 1e-6);
    CHECK(std::abs(occupation_fermi(0.5, 1.0) - 1.0 / (2.0 * kE + 1.0)) < 1e-15);
    CHECK(occupation_fermi(3.0, -2.0) < 1.0);
    CHECK_THROWS_AS(occupation_fermi(-1.0, 0.0), DomainError);
}

TEST_CASE("Bose occupation exceeds Fermi occupation") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> zdist(1e-6, 1.0);
    std::uniform_real_distribution<double> edist(1e-6, 20.0);
    for (int i = 0; i < 2000; ++i) {
        const double z = zdist(rng);
        const double be = edist(rng);
        CHECK(occupation_bose(z, be) > occupation_fermi(z, be));
    }
}

TEST_CASE("mono_energetic_state") {
    const double p = 2.0 * std::sqrt(kPi);
    const MonoEnergeticState s = mono_energetic_state(p);
    CHECK(std::abs(s.lambda - 1.0) < 1e-9);
    CHECK(std::abs(s.temperature - 2.0 * kPi) < 1e-6);
    CHECK(s.beta_eps == 1.0);
    CHECK(s.p0 == p);

    CHECK(std::abs(mono_energetic_state(205.93).lambda - 0.0172141) < 1e-6);
    CHECK(mono_energetic_state(1.0, {1.0, 2.0, 1.0}).temperature == 0.25);

    CHECK_THROWS_AS(mono_energetic_state(0.0), DomainError);
    CHECK_THROWS_AS(mono_energetic_state(-3.0), DomainError);
    CHECK_THROWS_AS(mono_energetic_state(1.0, {0.0, 1.0, 1.0}), DomainError);
}

TEST_CASE("mono-energetic wavelength matches the thermal wavelength definition") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> pdist(0.01, 1000.0);
    std::uniform_real_distribution<double> udist(0.1, 10.0);
    for (int i = 0; i < 500; ++i) {
        const NaturalUnits units{udist(rng), udist(rng), udist(rng)};
        const MonoEnergeticState s = mono_energetic_state(pdist(rng), units);
        const double lambda = thermal_wavelength(s.temperature, units);
        CHECK(std::abs(lambda - s.lambda) <= 1e-12 * s.lambda);
    }
}

TEST_CASE("reduced_fugacity") {
    CHECK(reduced_fugacity(1.0, 1.0) == 1.0);
    CHECK(reduced_fugacity(2.0, 4.0) == 2.0);
    CHECK(std::abs(reduced_fugacity(0.0172141, 5.1e-6) - 1.00007) < 1e-3);
    CHECK_THROWS_AS(reduced_fugacity(0.0, 1.0), DomainError);
    CHECK_THROWS_AS(reduced_fugacity(1.0, -1.0), DomainError);
}

TEST_CASE("b_factor") {
    for (SeriesBranch branch :
         {SeriesBranch::Bose, SeriesBranch::FermiFull, SeriesBranch::FermiTruncated}) {
        CHECK(std::abs(b_factor(1e-9, branch) - 1.0) < 1e-9);
        CHECK_THROWS_AS(b_factor(0.0, branch), DomainError);
        CHECK_THROWS_AS(b_factor(1.1, branch), DomainError);
    }
    CHECK(std::abs(b_factor(0.6986, SeriesBranch::Bose) - 1.4315) < 0.01);
    CHECK(std::abs(b_factor(1.0, SeriesBranch::Bose) - 2.612375) < 1e-5);
    CHECK(std::abs(b_factor(1.0, SeriesBranch::FermiFull) - oracle::kF32At1) < 1e-12);

    for (int i = 1; i <= 100; ++i) {
        const double z = i / 100.0;
        const double bose = b_factor(z, SeriesBranch::Bose);
        CHECK(bose > 1.0);
        CHECK(bose <= kZeta32 + 1e-12);
        for (SeriesBranch fermi : {SeriesBranch::FermiFull, SeriesBranch::FermiTruncated}) {
            const double b = b_factor(z, fermi);
            CHECK(b < 1.0);
            CHECK(b >= 0.76);
        }
    }
}

TEST_CASE("fugacity pair on the Bose branch uses zero condensate fraction") {
    for (int i = 1; i <= 20; ++i) {
        const double z = i / 20.0;
        const FugacityPair pair = fugacity_pair(z, SeriesBranch::Bose);
        CHECK(pair.z_prime == bose_g32(Fugacity(z)));
        CHECK(std::abs(pair.z * pair.b - pair.z_prime) <= 1e-15 * pair.z_prime);
    }
    const FugacityPair limit = fugacity_pair(0.0, SeriesBranch::Bose);
    CHECK(limit.z == 0.0);
    CHECK(limit.z_prime == 0.0);
    CHECK(limit.b == 1.0);
}

TEST_CASE("normalization scenario") {
    const auto s = NormalizationScenario::from_count_and_volume(1e6, 3.5);
    CHECK(std::abs(s.specific_volume * s.total_count - s.volume) <= 1e-12 * s.volume);
    CHECK_THROWS_AS(NormalizationScenario::from_count_and_volume(0.0, 1.0), DomainError);
}

TEST_CASE("specific_volume_from_constraint") {
    CHECK(std::abs(specific_volume_from_constraint(1.0, 1.0) - 0.1367364) < 1e-6);
    CHECK(std::abs(specific_volume_from_constraint(1.0, 1.0) - (kE - 1.0) / (4.0 * kPi)) < 1e-15);
    CHECK(std::abs(specific_volume_from_constraint(1.0, kE / 2.0) - 0.0795775) < 1e-6);
    CHECK(std::abs(specific_volume_from_constraint(2.0, 1.0) - 0.0341841) < 1e-6);
    CHECK_THROWS_AS(specific_volume_from_constraint(1.0, kE), DomainError);
    CHECK_THROWS_AS(specific_volume_from_constraint(1.0, 3.0), DomainError);
    CHECK_THROWS_AS(specific_volume_from_constraint(0.0, 0.5), DomainError);
}

TEST_CASE("constraint round trip: (4 pi v p0^2 / hbar^3) <n> = 1") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> pdist(0.1, 600.0);
    std::uniform_real_distribution<double> zdist(1e-6, 1.0);
    std::uniform_real_distribution<double> hdist(0.5, 2.0);
    for (int i = 0; i < 1000; ++i) {
        const double p0 = pdist(rng);
        const double z = zdist(rng);
        const NaturalUnits units{hdist(rng), 1.0, 1.0};
        const double v = specific_volume_from_constraint(p0, z, units);
        const double h3 = std::pow(units.hbar, 3);
        const double product = 4.0 * kPi * v * p0 * p0 / h3 * occupation_bose(z, 1.0);
        CHECK(std::abs(product - 1.0) <= 1e-12);
    }
}

TEST_CASE("reduced fugacity from the constraint equals K / (z^{-1} e - 1)") {
    for (double p0 : {50.0, 100.0, 193.6, 205.93, 400.0}) {
        for (double z : {0.05, 0.3, 0.7, 1.0}) {
            const double lambda = mono_energetic_state(p0).lambda;
            const double v = specific_volume_from_constraint(p0, z);
            const double k = coupling_from_momentum(p0).value();
            const double expected = k / (kE / z - 1.0);
            CHECK(std::abs(reduced_fugacity(lambda, v) - expected) <= 1e-10 * expected);
        }
    }
}
