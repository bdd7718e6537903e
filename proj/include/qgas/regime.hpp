#pragma once

#include <numbers>
#include <optional>
#include <string_view>
#include <vector>

#include "qgas/gas_statistics.hpp"
#include "qgas/special_functions.hpp"

namespace qgas {

/// (4 pi)^{5/2} = 32 pi^{5/2}.
inline constexpr double kFourPiPow52 =
    32.0 * std::numbers::pi * std::numbers::pi / std::numbers::inv_sqrtpi;

/// Dimensionless group K = (4 pi)^{5/2} / p0 of the self-consistency equation
/// z' = e b - K (Bose) and z' = K - e b (Fermi).
class CouplingK {
  public:
    explicit CouplingK(double value);

    double value() const noexcept { return value_; }

  private:
    double value_;
};

CouplingK coupling_from_momentum(double p0);

enum class RegimeLabel {
    Condensation,
    Dilution,
    AnomalousFermionic,
    NormalBose,
    AboveDilution,
    OutOfModelRange,
};

enum class SolvedBranch { Bose, Fermi, None };

enum class FermiSeries { Full, Truncated };

std::string_view to_string(RegimeLabel label);
std::string_view to_string(SolvedBranch branch);
std::string_view to_string(FermiSeries series);

SeriesBranch series_branch(FermiSeries series);

struct RegimeFlags {
    bool overlaps_fermionic_range = false;
    bool no_bose_root = false;
    bool no_fermi_root = false;
    bool near_threshold = false;

    /// Names of the set flags, in declaration order.
    std::vector<std::string_view> names() const;

    RegimeFlags& operator|=(const RegimeFlags& other);
    bool operator==(const RegimeFlags&) const = default;
};

struct RegimeReport {
    double p0 = 0.0;
    CouplingK coupling{1.0};
    std::optional<RegimeLabel> paper_label;
    std::optional<RegimeLabel> selfconsistent_label;
    SolvedBranch branch = SolvedBranch::None;
    std::optional<FugacityPair> fugacity; ///< present iff branch != None
    RegimeFlags flags;

    /// True when both classifiers ran and produced different labels.
    bool labels_disagree() const;
};

/// H(z) = e g(z)/z - g(z); the Bose equation reads H(z) = K. H(0+) = e and
/// H(1) = (e - 1) zeta(3/2). H is not monotone: it dips to 2.716244 at
/// z = 0.1002 and exceeds e only for z > 0.19184, where it is increasing.
double bose_balance(Fugacity z, const SeriesParams& params = {});

/// Phi(z) = e f(z)/z + f(z); the Fermi equation reads Phi(z) = K. Increasing
/// on (0, 1] with Phi(0+) = e.
double fermi_balance(Fugacity z, FermiSeries series, const SeriesParams& params = {});

/// H(z) - K on 0 < z <= 1.
double bose_residual(Fugacity z, CouplingK k, const SeriesParams& params = {});

/// Phi(z) - K on 0 < z <= 1.
double fermi_residual(Fugacity z, CouplingK k, FermiSeries series,
                      const SeriesParams& params = {});

struct SolveOutcome {
    enum class Status { Root, BelowWindow, AboveWindow };

    Status status;
    double z = 0.0; ///< meaningful only for Status::Root

    bool has_root() const noexcept { return status == Status::Root; }
};

/// Bisection cap; exceeding it throws ConvergenceError.
inline constexpr int kMaxBisections = 200;
inline constexpr double kBracketLow = 1e-9;

/// Root of H(z) = K for K in (e, H(1)], by bisection on [1e-9, 1] until the
/// bracket is narrower than tol. Outside that window returns BelowWindow
/// (K <= e) or AboveWindow (K > H(1)).
SolveOutcome solve_bose(CouplingK k, double tol, const SeriesParams& params = {});

/// Root of Phi(z) = K for K in (e, Phi(1)], same method and outcomes.
SolveOutcome solve_fermi(CouplingK k, FermiSeries series, double tol,
                         const SeriesParams& params = {});

/// (4 pi)^{5/2} / (e b - 1): momentum at which z' ~ 1.
double threshold_condensation(double b);

/// (4 pi)^{5/2} / (e b): momentum at which z' ~ 0.
double threshold_dilution(double b);

/// Canonical thresholds: dilution at b = 1 and condensation at b = 1.4.
inline constexpr double kDilutionB = 1.0;
inline constexpr double kCondensationB = 1.4;

/// Fugacity at which g_{3/2}(z) = 1 (bisection to tol).
double condensation_fugacity(double tol = 1e-12, const SeriesParams& params = {});

/// Momentum where the Bose equation yields z' = 1 exactly, i.e.
/// threshold_condensation(1 / condensation_fugacity()).
double selfconsistent_condensation_momentum(double tol = 1e-12, const SeriesParams& params = {});

inline constexpr double kDefaultWindow = 0.01;
inline constexpr double kDefaultSolverTol = 1e-10;

/// Literal rules: within window (relative) of P_cond -> Condensation (always
/// flagged overlaps_fermionic_range, since P_cond < P_dil); else within window
/// of P_dil -> Dilution; else p0 < P_dil -> AnomalousFermionic; else
/// AboveDilution. near_threshold is set within 2 windows of a threshold that
/// did not match.
RegimeReport classify_paper(double p0, double window = kDefaultWindow);

/// Solves the Bose equation, falling back to the Fermi equation when K is
/// above the Bose window. See README for the label table.
RegimeReport classify_selfconsistent(double p0, FermiSeries series = FermiSeries::Truncated,
                                     double tol = kDefaultSolverTol,
                                     const SeriesParams& params = {});

RegimeReport classify_both(double p0, double window = kDefaultWindow,
                           FermiSeries series = FermiSeries::Truncated,
                           double tol = kDefaultSolverTol, const SeriesParams& params = {});

} // namespace qgas
