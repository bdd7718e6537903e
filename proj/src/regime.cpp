#include "qgas/regime.hpp"

#include <cmath>
#include <string>

#include "qgas/errors.hpp"

namespace qgas {

namespace {

constexpr double kE = std::numbers::e;

void check_positive(double x, const char* what) {
    if (!(x > 0.0)) {
        throw DomainError(std::string(what) + " must be > 0, got " + std::to_string(x));
    }
}

void check_open_unit(double z, const char* who) {
    if (!(z > 0.0 && z <= 1.0)) {
        throw DomainError(std::string(who) + ": z must lie in (0, 1], got " + std::to_string(z));
    }
}

// Bisection on an increasing residual with r(lo) < 0 <= r(hi).
template <typename Residual>
double bisect(Residual&& residual, double lo, double hi, double tol, const char* who) {
    for (int it = 0; it < kMaxBisections; ++it) {
        if (hi - lo < tol) return 0.5 * (lo + hi);
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break; // no representable midpoint left
        if (residual(mid) < 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    throw ConvergenceError(std::string(who) + ": bracket width " + std::to_string(hi - lo) +
                           " did not fall below tol = " + std::to_string(tol));
}

template <typename Residual>
SolveOutcome solve_window(Residual&& residual, double k, double tol, const char* who) {
    check_positive(tol, "tol");
    if (k <= kE) return {SolveOutcome::Status::BelowWindow};
    const double top = residual(1.0);
    if (top < 0.0) return {SolveOutcome::Status::AboveWindow};
    if (top == 0.0) return {SolveOutcome::Status::Root, 1.0};
    return {SolveOutcome::Status::Root, bisect(residual, kBracketLow, 1.0, tol, who)};
}

} // namespace

CouplingK::CouplingK(double value) : value_(value) {
    check_positive(value, "CouplingK");
}

CouplingK coupling_from_momentum(double p0) {
    check_positive(p0, "p0");
    return CouplingK(kFourPiPow52 / p0);
}

std::string_view to_string(RegimeLabel label) {
    switch (label) {
    case RegimeLabel::Condensation: return "Condensation";
    case RegimeLabel::Dilution: return "Dilution";
    case RegimeLabel::AnomalousFermionic: return "AnomalousFermionic";
    case RegimeLabel::NormalBose: return "NormalBose";
    case RegimeLabel::AboveDilution: return "AboveDilution";
    case RegimeLabel::OutOfModelRange: return "OutOfModelRange";
    }
    return "?";
}

std::string_view to_string(SolvedBranch branch) {
    switch (branch) {
    case SolvedBranch::Bose: return "bose";
    case SolvedBranch::Fermi: return "fermi";
    case SolvedBranch::None: return "none";
    }
    return "?";
}

std::string_view to_string(FermiSeries series) {
    return series == FermiSeries::Full ? "full" : "truncated";
}

SeriesBranch series_branch(FermiSeries series) {
    return series == FermiSeries::Full ? SeriesBranch::FermiFull : SeriesBranch::FermiTruncated;
}

std::vector<std::string_view> RegimeFlags::names() const {
    std::vector<std::string_view> out;
    if (overlaps_fermionic_range) out.emplace_back("overlaps_fermionic_range");
    if (no_bose_root) out.emplace_back("no_bose_root");
    if (no_fermi_root) out.emplace_back("no_fermi_root");
    if (near_threshold) out.emplace_back("near_threshold");
    return out;
}

RegimeFlags& RegimeFlags::operator|=(const RegimeFlags& other) {
    overlaps_fermionic_range |= other.overlaps_fermionic_range;
    no_bose_root |= other.no_bose_root;
    no_fermi_root |= other.no_fermi_root;
    near_threshold |= other.near_threshold;
    return *this;
}

bool RegimeReport::labels_disagree() const {
    return paper_label && selfconsistent_label && *paper_label != *selfconsistent_label;
}

double bose_balance(Fugacity z, const SeriesParams& params) {
    check_open_unit(z.value(), "bose_balance");
    const double g = bose_g32(z, params);
    return kE * g / z.value() - g;
}

double fermi_balance(Fugacity z, FermiSeries series, const SeriesParams& params) {
    check_open_unit(z.value(), "fermi_balance");
    const double f = branch_series(series_branch(series), z, params);
    return kE * f / z.value() + f;
}

double bose_residual(Fugacity z, CouplingK k, const SeriesParams& params) {
    return bose_balance(z, params) - k.value();
}

double fermi_residual(Fugacity z, CouplingK k, FermiSeries series, const SeriesParams& params) {
    return fermi_balance(z, series, params) - k.value();
}

SolveOutcome solve_bose(CouplingK k, double tol, const SeriesParams& params) {
    auto residual = [&](double z) { return bose_residual(Fugacity(z), k, params); };
    return solve_window(residual, k.value(), tol, "solve_bose");
}

SolveOutcome solve_fermi(CouplingK k, FermiSeries series, double tol, const SeriesParams& params) {
    auto residual = [&](double z) { return fermi_residual(Fugacity(z), k, series, params); };
    return solve_window(residual, k.value(), tol, "solve_fermi");
}

double threshold_condensation(double b) {
    const double denom = kE * b - 1.0;
    if (!(denom > 0.0)) {
        throw DomainError("threshold_condensation: e*b - 1 must be > 0, got b = " +
                          std::to_string(b));
    }
    return kFourPiPow52 / denom;
}

double threshold_dilution(double b) {
    check_positive(b, "b");
    return kFourPiPow52 / (kE * b);
}

double condensation_fugacity(double tol, const SeriesParams& params) {
    check_positive(tol, "tol");
    auto residual = [&](double z) { return bose_g32(Fugacity(z), params) - 1.0; };
    return bisect(residual, 0.0, 1.0, tol, "condensation_fugacity");
}

double selfconsistent_condensation_momentum(double tol, const SeriesParams& params) {
    return threshold_condensation(1.0 / condensation_fugacity(tol, params));
}

RegimeReport classify_paper(double p0, double window) {
    check_positive(p0, "p0");
    check_positive(window, "window");
    const double p_cond = threshold_condensation(kCondensationB);
    const double p_dil = threshold_dilution(kDilutionB);
    const double d_cond = std::abs(p0 - p_cond);
    const double d_dil = std::abs(p0 - p_dil);

    RegimeReport report;
    report.p0 = p0;
    report.coupling = coupling_from_momentum(p0);
    const bool at_cond = d_cond <= window * p_cond;
    const bool at_dil = !at_cond && d_dil <= window * p_dil;
    if (at_cond) {
        report.paper_label = RegimeLabel::Condensation;
        report.flags.overlaps_fermionic_range = true;
    } else if (at_dil) {
        report.paper_label = RegimeLabel::Dilution;
    } else if (p0 < p_dil) {
        report.paper_label = RegimeLabel::AnomalousFermionic;
    } else {
        report.paper_label = RegimeLabel::AboveDilution;
    }
    const bool near_cond = !at_cond && d_cond <= 2.0 * window * p_cond;
    const bool near_dil = !at_dil && d_dil <= 2.0 * window * p_dil;
    report.flags.near_threshold = near_cond || near_dil;
    return report;
}

RegimeReport classify_selfconsistent(double p0, FermiSeries series, double tol,
                                     const SeriesParams& params) {
    check_positive(p0, "p0");
    check_positive(tol, "tol");
    RegimeReport report;
    report.p0 = p0;
    report.coupling = coupling_from_momentum(p0);
    const double k = report.coupling.value();

    if (std::abs(k - kE) <= tol) {
        // z -> 0+ limit, where b -> 1.
        report.selfconsistent_label = RegimeLabel::Dilution;
        report.branch = SolvedBranch::Bose;
        report.fugacity = FugacityPair{0.0, 0.0, 1.0};
        return report;
    }

    const SolveOutcome bose = solve_bose(report.coupling, tol, params);
    if (bose.has_root()) {
        const FugacityPair pair = fugacity_pair(bose.z, SeriesBranch::Bose, params);
        report.branch = SolvedBranch::Bose;
        report.fugacity = pair;
        if (pair.z_prime >= 1.0) {
            report.selfconsistent_label = RegimeLabel::Condensation;
        } else if (pair.z_prime <= tol) {
            report.selfconsistent_label = RegimeLabel::Dilution;
        } else {
            report.selfconsistent_label = RegimeLabel::NormalBose;
        }
        return report;
    }

    report.flags.no_bose_root = true;
    if (bose.status == SolveOutcome::Status::BelowWindow) {
        report.selfconsistent_label = RegimeLabel::AboveDilution;
        return report;
    }

    const SolveOutcome fermi = solve_fermi(report.coupling, series, tol, params);
    if (fermi.has_root()) {
        report.selfconsistent_label = RegimeLabel::AnomalousFermionic;
        report.branch = SolvedBranch::Fermi;
        report.fugacity = fugacity_pair(fermi.z, series_branch(series), params);
    } else {
        report.selfconsistent_label = RegimeLabel::OutOfModelRange;
        report.flags.no_fermi_root = true;
    }
    return report;
}

RegimeReport classify_both(double p0, double window, FermiSeries series, double tol,
                           const SeriesParams& params) {
    const RegimeReport paper = classify_paper(p0, window);
    RegimeReport report = classify_selfconsistent(p0, series, tol, params);
    report.paper_label = paper.paper_label;
    report.flags |= paper.flags;
    return report;
}

} // namespace qgas
