#include "cli_app.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "qgas/errors.hpp"
#include "qgas/gas_statistics.hpp"
#include "qgas/regime.hpp"
#include "qgas/special_functions.hpp"
#include "qgas/sweep_report.hpp"

namespace qgas::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

enum class Format { Text, Csv, Json };

struct Config {
    double tolerance = 1e-12;
    std::size_t max_terms = 100000;
    double window = kDefaultWindow;
    double solver_tol = kDefaultSolverTol;
    FermiSeries series = FermiSeries::Truncated;
    Format format = Format::Text;
    std::string out;

    SeriesParams params() const { return {tolerance, max_terms}; }
};

const std::map<std::string, FermiSeries> kSeriesNames{{"full", FermiSeries::Full},
                                                      {"truncated", FermiSeries::Truncated}};
const std::map<std::string, Format> kFormatNames{
    {"text", Format::Text}, {"csv", Format::Csv}, {"json", Format::Json}};
const std::map<std::string, SweepMode> kModeNames{
    {"paper", SweepMode::Paper}, {"self", SweepMode::Self}, {"both", SweepMode::Both}};

enum class PolylogKind { Bose, Fermi, Fermi3 };
const std::map<std::string, PolylogKind> kKindNames{
    {"bose", PolylogKind::Bose}, {"fermi", PolylogKind::Fermi}, {"fermi3", PolylogKind::Fermi3}};
const std::map<std::string, OccupationBranch> kBranchNames{
    {"bose", OccupationBranch::Bose}, {"fermi", OccupationBranch::Fermi}};

std::string_view kind_name(PolylogKind kind) {
    switch (kind) {
    case PolylogKind::Bose: return "bose";
    case PolylogKind::Fermi: return "fermi";
    case PolylogKind::Fermi3: return "fermi3";
    }
    return "?";
}

ordered_json label_json(const std::optional<RegimeLabel>& label) {
    return label ? ordered_json(std::string(to_string(*label))) : ordered_json(nullptr);
}

ordered_json report_json(const RegimeReport& report, FermiSeries series) {
    ordered_json obj;
    obj["p0"] = report.p0;
    obj["K"] = report.coupling.value();
    obj["paper_label"] = label_json(report.paper_label);
    obj["selfconsistent_label"] = label_json(report.selfconsistent_label);
    obj["branch"] = std::string(to_string(report.branch));
    if (report.fugacity) {
        obj["fugacity"] = ordered_json{{"z", report.fugacity->z},
                                       {"z_prime", report.fugacity->z_prime},
                                       {"b", report.fugacity->b}};
    } else {
        obj["fugacity"] = nullptr;
    }
    ordered_json flags = ordered_json::array();
    for (std::string_view name : report.flags.names()) flags.push_back(std::string(name));
    obj["flags"] = std::move(flags);
    obj["labels_disagree"] = report.labels_disagree();
    obj["series"] = std::string(to_string(series));
    return obj;
}

std::string report_text(const RegimeReport& report) {
    std::ostringstream os;
    os << "p0: " << format_number(report.p0) << '\n';
    os << "K: " << format_number(report.coupling.value()) << '\n';
    if (report.paper_label) os << "paper: " << to_string(*report.paper_label) << '\n';
    if (report.selfconsistent_label) {
        os << "self: " << to_string(*report.selfconsistent_label) << '\n';
        os << "branch: " << to_string(report.branch) << '\n';
    }
    if (report.fugacity) {
        os << "z: " << format_number(report.fugacity->z) << '\n';
        os << "z_prime: " << format_number(report.fugacity->z_prime) << '\n';
        os << "b: " << format_number(report.fugacity->b) << '\n';
    }
    const auto names = report.flags.names();
    os << "flags:";
    for (std::string_view name : names) os << ' ' << name;
    os << '\n';
    if (report.labels_disagree()) os << "note: classifiers disagree\n";
    return os.str();
}

struct ThresholdRow {
    std::string name;
    double b;
    double p0;
};

std::string thresholds_output(const std::vector<ThresholdRow>& rows, Format format) {
    if (format == Format::Json) {
        ordered_json array = ordered_json::array();
        for (const ThresholdRow& row : rows) {
            array.push_back(ordered_json{{"name", row.name}, {"b", row.b}, {"p0", row.p0}});
        }
        return array.dump() + "\n";
    }
    std::string out = format == Format::Csv ? "name,b,p0\n" : "";
    for (const ThresholdRow& row : rows) {
        if (format == Format::Csv) {
            out += row.name + ',' + format_number(row.b) + ',' + format_number(row.p0) + '\n';
        } else {
            out += row.name + "  b = " + format_number(row.b) + "  p0 = " + format_number(row.p0) +
                   '\n';
        }
    }
    return out;
}

class FileIoError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

void deliver(const std::string& payload, const Config& config, std::ostream& out) {
    if (config.out.empty()) {
        out << payload;
        return;
    }
    std::ofstream file(config.out, std::ios::binary);
    if (!file) throw FileIoError("cannot open output file '" + config.out + "'");
    file << payload;
    if (!file.flush()) throw FileIoError("failed writing output file '" + config.out + "'");
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Config config;
    CLI::App app{"Mono-energetic ideal Bose gas: polylogarithms, self-consistency and regimes",
                 "qgas"};
    app.require_subcommand(1);
    app.fallthrough();

    CLI::Option* tolerance_opt =
        app.add_option("--tolerance", config.tolerance, "Series term cutoff (env QGAS_TOL)")
            ->check(CLI::PositiveNumber);
    app.add_option("--max-terms", config.max_terms, "Series term cap")->check(CLI::PositiveNumber);
    CLI::Option* window_opt =
        app.add_option("--window", config.window,
                       "Relative half-width of threshold windows (env QGAS_WINDOW)")
            ->check(CLI::PositiveNumber);
    app.add_option("--solver-tol", config.solver_tol, "Bisection bracket width")
        ->check(CLI::PositiveNumber);
    std::string series_name = "truncated";
    CLI::Option* series_opt =
        app.add_option("--series", series_name, "Fermi series: full | truncated (env QGAS_SERIES)")
            ->check(CLI::IsMember(kSeriesNames));
    std::string format_name = "text";
    app.add_option("--format", format_name, "Output format: text | csv | json")
        ->check(CLI::IsMember(kFormatNames));
    app.add_option("--out", config.out, "Write output to this file instead of stdout");

    // polylog
    std::string kind_arg;
    double poly_z = 0.0;
    CLI::App* polylog = app.add_subcommand("polylog", "Evaluate g_{3/2} or f_{3/2}");
    polylog->add_option("--kind", kind_arg, "bose | fermi | fermi3")
        ->required()
        ->check(CLI::IsMember(kKindNames));
    polylog->add_option("--z", poly_z, "Fugacity in [0, 1]")->required();

    // thresholds
    std::optional<double> thresholds_b;
    CLI::App* thresholds = app.add_subcommand("thresholds", "Condensation and dilution momenta");
    thresholds->add_option("--b", thresholds_b, "b factor (default: canonical table)");

    // classify
    double classify_p0 = 0.0;
    std::string classify_mode_name = "both";
    CLI::App* classify = app.add_subcommand("classify", "Classify one momentum");
    classify->add_option("--p0", classify_p0, "Momentum (natural units)")->required();
    classify->add_option("--mode", classify_mode_name, "paper | self | both")
        ->check(CLI::IsMember(kModeNames));

    // sweep
    SweepSpec spec;
    CLI::App* sweep = app.add_subcommand("sweep", "Classify a linear momentum grid");
    sweep->add_option("--p-min", spec.p_min)->required();
    sweep->add_option("--p-max", spec.p_max)->required();
    sweep->add_option("--steps", spec.steps)->required();
    std::string sweep_mode_name = "both";
    sweep->add_option("--mode", sweep_mode_name, "paper | self | both")
        ->check(CLI::IsMember(kModeNames));

    // occupation
    double occ_z = 0.0;
    double occ_min = 0.0;
    double occ_max = 1.0;
    int occ_steps = 11;
    std::string occ_branch_name = "bose";
    CLI::App* occupation = app.add_subcommand("occupation", "Tabulate an occupation curve");
    occupation->add_option("--z", occ_z)->required();
    occupation->add_option("--beta-eps-min", occ_min);
    occupation->add_option("--beta-eps-max", occ_max);
    occupation->add_option("--steps", occ_steps);
    occupation->add_option("--branch", occ_branch_name, "bose | fermi")
        ->check(CLI::IsMember(kBranchNames));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
        // CLI11 quietly skips environment values that fail validation, so
        // fallbacks are applied here where a bad value can be reported.
        const std::pair<CLI::Option*, const char*> env_backed[] = {
            {tolerance_opt, "QGAS_TOL"}, {window_opt, "QGAS_WINDOW"}, {series_opt, "QGAS_SERIES"}};
        for (const auto& [opt, name] : env_backed) {
            const char* value = std::getenv(name);
            if (opt->count() > 0 || value == nullptr) continue;
            try {
                opt->add_result(std::string(value));
                opt->run_callback();
            } catch (const CLI::ParseError& e) {
                throw CLI::ValidationError(std::string(name), e.what());
            }
        }
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "qgas: " << e.what() << '\n';
        return kUsage;
    }

    config.series = kSeriesNames.at(series_name);
    config.format = kFormatNames.at(format_name);
    const PolylogKind kind = *polylog ? kKindNames.at(kind_arg) : PolylogKind::Bose;
    const SweepMode classify_mode = kModeNames.at(classify_mode_name);
    spec.mode = kModeNames.at(sweep_mode_name);
    const OccupationBranch occ_branch = kBranchNames.at(occ_branch_name);

    try {
        const SeriesParams params = config.params();
        std::string payload;

        if (*polylog) {
            const Fugacity z(poly_z);
            double value = 0.0;
            switch (kind) {
            case PolylogKind::Bose: value = bose_g32(z, params); break;
            case PolylogKind::Fermi: value = fermi_f32_full(z, params); break;
            case PolylogKind::Fermi3: value = fermi_f32_truncated(z); break;
            }
            if (config.format == Format::Json) {
                payload = ordered_json{{"kind", kind_name(kind)}, {"z", poly_z}, {"value", value}}
                              .dump() +
                          "\n";
            } else if (config.format == Format::Csv) {
                payload = "kind,z,value\n" + std::string(kind_name(kind)) + ',' +
                          format_number(poly_z) + ',' + format_number(value) + '\n';
            } else {
                payload = format_number(value) + '\n';
            }
        } else if (*thresholds) {
            std::vector<ThresholdRow> rows;
            if (thresholds_b) {
                const double b = *thresholds_b;
                rows.push_back({"dilution", b, threshold_dilution(b)});
                rows.push_back({"condensation", b, threshold_condensation(b)});
            } else {
                const double z_c = condensation_fugacity(1e-14, params);
                rows.push_back({"dilution", kDilutionB, threshold_dilution(kDilutionB)});
                rows.push_back(
                    {"condensation", kCondensationB, threshold_condensation(kCondensationB)});
                rows.push_back({"selfconsistent_condensation", 1.0 / z_c,
                                threshold_condensation(1.0 / z_c)});
            }
            payload = thresholds_output(rows, config.format);
        } else if (*classify) {
            SweepSpec point;
            point.mode = classify_mode;
            point.series = config.series;
            point.window = config.window;
            point.tol = config.solver_tol;
            point.params = params;
            const RegimeReport report = classify_point(classify_p0, point);
            if (config.format == Format::Json) {
                payload = report_json(report, config.series).dump() + "\n";
            } else if (config.format == Format::Csv) {
                payload = emit_csv({make_row(report, classify_mode)});
            } else {
                payload = report_text(report);
            }
        } else if (*sweep) {
            spec.series = config.series;
            spec.window = config.window;
            spec.tol = config.solver_tol;
            spec.params = params;
            const std::vector<SweepRow> rows = run_sweep(spec);
            payload = config.format == Format::Json ? emit_json(rows) : emit_csv(rows);
        } else if (*occupation) {
            const auto points = occupation_curve(occ_z, occ_min, occ_max, occ_steps, occ_branch);
            payload = config.format == Format::Json ? emit_occupation_json(points)
                                                    : emit_occupation_csv(points);
        }

        deliver(payload, config, out);
        return kOk;
    } catch (const PreconditionError& e) {
        err << "qgas: usage: " << e.what() << '\n';
        return kUsage;
    } catch (const DomainError& e) {
        err << "qgas: domain error: " << e.what() << '\n';
        return kDomain;
    } catch (const FileIoError& e) {
        err << "qgas: I/O error: " << e.what() << '\n';
        return kFileIo;
    } catch (const std::exception& e) {
        err << "qgas: numeric failure: " << e.what() << '\n';
        return kNumeric;
    }
}

} // namespace qgas::cli
