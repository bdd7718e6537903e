#include <doctest.h>

#include <cmath>
#include <random>
#include <thread>
#include <vector>

#include "oracles.hpp"
#include "qgas/errors.hpp"
#include "qgas/special_functions.hpp"

using namespace qgas;

TEST_CASE("fugacity rejects values outside [0, 1]") {
    CHECK_THROWS_AS(Fugacity(-1e-12), DomainError);
    CHECK_THROWS_AS(Fugacity(1.0 + 1e-12), DomainError);
    CHECK_THROWS_AS(Fugacity(std::nan("")), DomainError);
    CHECK(Fugacity(0.0).value() == 0.0);
    CHECK(Fugacity(1.0).value() == 1.0);
}

TEST_CASE("series params are validated") {
    CHECK_THROWS_AS(bose_g32(Fugacity(0.5), {0.0, 10}), PreconditionError);
    CHECK_THROWS_AS(fermi_f32_full(Fugacity(0.5), {1e-12, 0}), PreconditionError);
}

TEST_CASE("bose_g32 matches frozen and brute-force values") {
    CHECK(bose_g32(Fugacity(0.0)) == 0.0);
    CHECK(std::abs(bose_g32(Fugacity(1.0)) - 2.612375) < 1e-5);
    CHECK(std::abs(bose_g32(Fugacity(1.0)) - oracle::kG32At1) < 1e-12);
    CHECK(std::abs(bose_g32(Fugacity(1.0)) - oracle::brute_force_polylog32(1.0, false)) < 1e-9);
    CHECK(std::abs(bose_g32(Fugacity(0.7)) - 1.0031) < 1e-4);
    CHECK(std::abs(bose_g32(Fugacity(0.7)) - oracle::kG32At07) < 1e-12);
    CHECK(std::abs(bose_g32(Fugacity(0.7)) - oracle::brute_force_polylog32(0.7, false, 500)) < 1e-12);
    CHECK(std::abs(bose_g32(Fugacity(0.99)) - oracle::brute_force_polylog32(0.99, false)) < 1e-12);
}

TEST_CASE("bose_g32 near z = 1 uses the tail estimate accurately") {
    for (double z : {0.9989, 0.9991, 0.9995, 0.9999, 0.99999}) {
        CAPTURE(z);
        CHECK(std::abs(bose_g32(Fugacity(z)) - oracle::brute_force_polylog32(z, false)) < 1e-9);
        CHECK(std::abs(fermi_f32_full(Fugacity(z)) - oracle::brute_force_polylog32(z, true)) < 1e-12);
    }
}

TEST_CASE("fermi_f32_full matches frozen and brute-force values") {
    CHECK(fermi_f32_full(Fugacity(0.0)) == 0.0);
    CHECK(std::abs(fermi_f32_full(Fugacity(1.0)) - 0.765147) < 1e-5);
    CHECK(std::abs(fermi_f32_full(Fugacity(1.0)) - oracle::kF32At1) < 1e-13);
    CHECK(std::abs(fermi_f32_full(Fugacity(0.5)) - 0.429825) < 1e-4);
    CHECK(std::abs(fermi_f32_full(Fugacity(0.5)) - oracle::kF32At05) < 1e-12);
    CHECK(std::abs(fermi_f32_full(Fugacity(0.5)) - oracle::brute_force_polylog32(0.5, true, 200)) < 1e-12);
}

TEST_CASE("three-term Fermi truncation") {
    CHECK(fermi_f32_truncated(Fugacity(0.0)) == 0.0);
    CHECK(std::abs(fermi_f32_truncated(Fugacity(1.0)) - 0.838897) < 1e-6);
    CHECK(std::abs(fermi_f32_truncated(Fugacity(1.0)) - oracle::kF3At1) < 1e-15);
    CHECK(std::abs(fermi_f32_truncated(Fugacity(0.1)) - 0.096657) < 1e-6);
    CHECK(std::abs(fermi_f32_truncated(Fugacity(0.1)) - oracle::kF3At01) < 1e-15);
}

TEST_CASE("truncation failure reports the partial sum") {
    try {
        bose_g32(Fugacity(0.9), {1e-12, 5});
        FAIL("expected TruncationError");
    } catch (const TruncationError& e) {
        CHECK(e.terms() == 5);
        CHECK(e.last_term() > 1e-12);
        CHECK(e.partial_sum() == doctest::Approx(oracle::brute_force_polylog32(0.9, false, 5)));
    }
    // Near z = 1 the tail estimate cannot be trusted after a handful of terms.
    CHECK_THROWS_AS(bose_g32(Fugacity(1.0), {1e-12, 3}), TruncationError);
    CHECK_THROWS_AS(fermi_f32_full(Fugacity(1.0), {1e-12, 3}), TruncationError);
}

TEST_CASE("quadrature oracle") {
    CHECK(bose_g32_quadrature(Fugacity(0.0)) == 0.0);
    CHECK(std::abs(bose_g32_quadrature(Fugacity(0.5)) - bose_g32(Fugacity(0.5))) < 1e-8);
    CHECK(std::abs(bose_g32_quadrature(Fugacity(0.9)) - bose_g32(Fugacity(0.9))) < 1e-8);
    CHECK(std::abs(bose_g32_quadrature(Fugacity(1.0)) - oracle::kG32At1) < 1e-8);
}

TEST_CASE("term-wise bounds z <= g(z) <= z zeta(3/2)") {
    for (int i = 0; i <= 100; ++i) {
        const double z = i / 100.0;
        const double g = bose_g32(Fugacity(z));
        CAPTURE(z);
        CHECK(g >= z);
        CHECK(g <= z * kZeta32 + 1e-12);
        CHECK(g <= kZeta32 + 1e-12);
        const double f = fermi_f32_full(Fugacity(z));
        CHECK(f >= 0.0);
        CHECK(f <= kEta32 + 1e-12);
    }
}

TEST_CASE("alternating remainder bound against the three-term truncation") {
    for (int i = 0; i <= 100; ++i) {
        const double z = i / 100.0;
        const double full = fermi_f32_full(Fugacity(z));
        const double truncated = fermi_f32_truncated(Fugacity(z));
        const double bound = std::pow(z, 4) / 8.0;
        CAPTURE(z);
        CHECK(full <= truncated + bound + 1e-15);
        CHECK(std::abs(full - truncated) <= bound + 1e-15);
    }
}

TEST_CASE("duplication identity f(z) = g(z) - 2^{-1/2} g(z^2)") {
    std::mt19937_64 rng(20261016);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<double> zs{0.0, 1.0, 0.999, 0.9995};
    for (int i = 0; i < 200; ++i) zs.push_back(unit(rng));
    for (double z : zs) {
        const double lhs = fermi_f32_full(Fugacity(z));
        const double rhs = bose_g32(Fugacity(z)) - bose_g32(Fugacity(z * z)) / std::sqrt(2.0);
        CAPTURE(z);
        CHECK(std::abs(lhs - rhs) < 1e-10);
    }
}

TEST_CASE("strict monotonicity on a 0.01 grid") {
    double prev_g = -1.0;
    double prev_f = -1.0;
    for (int i = 0; i <= 100; ++i) {
        const double z = i / 100.0;
        const double g = bose_g32(Fugacity(z));
        const double f = fermi_f32_full(Fugacity(z));
        CAPTURE(z);
        CHECK(g > prev_g);
        CHECK(f > prev_f);
        prev_g = g;
        prev_f = f;
    }
}

TEST_CASE("series are continuous across the near-unit switch") {
    const double below = bose_g32(Fugacity(kNearUnitFugacity));
    const double above = bose_g32(Fugacity(std::nextafter(kNearUnitFugacity, 2.0)));
    CHECK(std::abs(above - below) < 2e-9);
    const double fb = fermi_f32_full(Fugacity(kNearUnitFugacity));
    const double fa = fermi_f32_full(Fugacity(std::nextafter(kNearUnitFugacity, 2.0)));
    CHECK(std::abs(fa - fb) < 1e-12);
}

TEST_CASE("series are safe to evaluate concurrently") {
    std::vector<double> results(8);
    std::vector<std::thread> threads;
    for (std::size_t i = 0; i < results.size(); ++i) {
        threads.emplace_back([&results, i] { results[i] = bose_g32(Fugacity(0.9995)); });
    }
    for (auto& t : threads) t.join();
    for (double r : results) CHECK(r == results.front());
}
