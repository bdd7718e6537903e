#pragma once

#include <cstddef>

namespace qgas {

/// Truncation control for the order-3/2 polylogarithm series.
struct SeriesParams {
    double tolerance = 1e-12;      ///< absolute term-size cutoff
    std::size_t max_terms = 100000;

    /// Throws PreconditionError unless tolerance > 0 and max_terms >= 1.
    void validate() const;
};

/// Activity z, restricted to [0, 1] wherever the series are used.
class Fugacity {
  public:
    /// Throws DomainError outside [0, 1] or for NaN.
    explicit Fugacity(double value);

    double value() const noexcept { return value_; }

  private:
    double value_;
};

/// zeta(3/2) and eta(3/2) = (1 - 2^{-1/2}) zeta(3/2).
inline constexpr double kZeta32 = 2.612375348685488343348567567924071630571;
inline constexpr double kEta32 = 0.765147024625407945367268758602559508731;

/// Above this fugacity the series switch to a fixed number of terms plus an
/// Euler-Maclaurin tail.
inline constexpr double kNearUnitFugacity = 0.999;

/// g_{3/2}(z) = sum_{k>=1} z^k / k^{3/2}.
///
/// For z <= 0.999 the sum stops once the remainder bound t_k z/(1 - z) is
/// below params.tolerance and throws TruncationError if max_terms is reached
/// first. Closer to z = 1 the terms decay only like k^{-3/2}; there the sum
/// runs for min(max_terms, 4096) terms and the remainder is added from an
/// Euler-Maclaurin estimate whose leading integral is evaluated in closed form.
double bose_g32(Fugacity z, const SeriesParams& params = {});

/// f_{3/2}(z) = sum_{k>=1} (-1)^{k+1} z^k / k^{3/2}. Stops at the first term
/// below tolerance (which bounds the remainder); near z = 1 uses a fixed
/// number of terms plus an alternating Euler-Maclaurin tail.
double fermi_f32_full(Fugacity z, const SeriesParams& params = {});

/// The three-term truncation z - z^2/2^{3/2} + z^3/3^{3/2}.
double fermi_f32_truncated(Fugacity z);

/// g_{3/2}(z) from its integral representation
///   (2/sqrt(pi)) * int_0^inf x^{1/2} / (z^{-1} e^x - 1) dx,
/// evaluated by adaptive Gauss-Kronrod after x = t^2. Independent of the
/// series path; intended as a test oracle. Valid on [0, 1] (z = 1 is regular
/// after the substitution). Throws ConvergenceError if the error estimate
/// stays above 1e-9.
double bose_g32_quadrature(Fugacity z);

} // namespace qgas
