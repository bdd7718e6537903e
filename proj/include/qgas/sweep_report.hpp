#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qgas/errors.hpp"
#include "qgas/regime.hpp"

namespace qgas {

enum class SweepMode { Paper, Self, Both };

std::string_view to_string(SweepMode mode);

struct SweepSpec {
    double p_min = 0.0;
    double p_max = 0.0;
    int steps = 2;
    SweepMode mode = SweepMode::Both;
    FermiSeries series = FermiSeries::Truncated;
    double window = kDefaultWindow;
    double tol = kDefaultSolverTol;
    SeriesParams params{};

    /// PreconditionError unless p_min < p_max and steps >= 2; DomainError for
    /// non-positive window or tol.
    void validate() const;
};

/// Linear grid with exactly spec.steps points, both endpoints included.
std::vector<double> momentum_grid(const SweepSpec& spec);

/// One sweep record. Absent values serialize as an empty CSV cell / JSON null.
struct SweepRow {
    double p0 = 0.0;
    double coupling = 0.0;
    std::optional<std::string> paper_label;
    std::optional<std::string> selfconsistent_label;
    std::optional<std::string> branch; ///< absent in paper mode
    std::optional<double> z;
    std::optional<double> z_prime;
    std::optional<double> b;
    std::vector<std::string> flags;

    bool operator==(const SweepRow&) const = default;
};

/// Raised by run_sweep when a grid point fails to classify.
class SweepPointError : public DomainError {
  public:
    SweepPointError(const std::string& what, double p0) : DomainError(what), p0_(p0) {}

    double p0() const noexcept { return p0_; }

  private:
    double p0_;
};

SweepRow make_row(const RegimeReport& report, SweepMode mode);

/// Classifies one momentum the way run_sweep does for each grid point.
RegimeReport classify_point(double p0, const SweepSpec& spec);

/// Rows in ascending p0. Grid points are evaluated in parallel; the result
/// does not depend on evaluation order.
std::vector<SweepRow> run_sweep(const SweepSpec& spec);

inline constexpr std::string_view kCsvHeader = "p0,K,paper_label,selfconsistent_label,branch,z,z_prime,b,flags";

/// Shortest decimal that round-trips to the same double.
std::string format_number(double x);

std::string emit_csv(const std::vector<SweepRow>& rows);
std::string emit_json(const std::vector<SweepRow>& rows);

/// Inverse of emit_json / emit_csv. Throws PreconditionError on malformed input.
std::vector<SweepRow> parse_json_rows(std::string_view text);
std::vector<SweepRow> parse_csv_rows(std::string_view text);

enum class OccupationBranch { Bose, Fermi };

struct OccupationPoint {
    double beta_eps;
    double occupation;
};

/// Occupation along a linear beta*eps grid. PreconditionError unless
/// beta_eps_min < beta_eps_max and steps >= 2; SingularityError (naming the
/// grid point) if the Bose grid touches z = 1, beta_eps = 0.
std::vector<OccupationPoint> occupation_curve(double z, double beta_eps_min, double beta_eps_max,
                                              int steps, OccupationBranch branch);

std::string emit_occupation_csv(const std::vector<OccupationPoint>& points);
std::string emit_occupation_json(const std::vector<OccupationPoint>& points);

} // namespace qgas
