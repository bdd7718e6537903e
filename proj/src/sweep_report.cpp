#include "qgas/sweep_report.hpp"

#include <algorithm>
#include <charconv>
#include <exception>
#include <execution>
#include <numeric>
#include <system_error>

#include <nlohmann/json.hpp>

namespace qgas {

namespace {

using ordered_json = nlohmann::ordered_json;

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = text.find(sep, start);
        if (pos == std::string_view::npos) {
            parts.push_back(text.substr(start));
            return parts;
        }
        parts.push_back(text.substr(start, pos - start));
        start = pos + 1;
    }
}

double parse_number(std::string_view cell) {
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
    if (ec != std::errc{} || ptr != cell.data() + cell.size()) {
        throw PreconditionError("malformed number '" + std::string(cell) + "'");
    }
    return value;
}

std::optional<double> parse_optional_number(std::string_view cell) {
    if (cell.empty()) return std::nullopt;
    return parse_number(cell);
}

std::optional<std::string> optional_text(std::string_view cell) {
    if (cell.empty()) return std::nullopt;
    return std::string(cell);
}

void append_cell(std::string& line, const std::optional<double>& value) {
    line += ',';
    if (value) line += format_number(*value);
}

void append_cell(std::string& line, const std::optional<std::string>& value) {
    line += ',';
    if (value) line += *value;
}

template <typename T>
ordered_json nullable(const std::optional<T>& value) {
    return value ? ordered_json(*value) : ordered_json(nullptr);
}

template <typename T>
std::optional<T> from_nullable(const ordered_json& value) {
    if (value.is_null()) return std::nullopt;
    return value.get<T>();
}

std::vector<double> linear_grid(double lo, double hi, int steps) {
    std::vector<double> grid(static_cast<std::size_t>(steps));
    const double step = (hi - lo) / (steps - 1);
    for (int i = 0; i < steps; ++i) grid[i] = lo + i * step;
    grid.back() = hi;
    return grid;
}

} // namespace

std::string_view to_string(SweepMode mode) {
    switch (mode) {
    case SweepMode::Paper: return "paper";
    case SweepMode::Self: return "self";
    case SweepMode::Both: return "both";
    }
    return "?";
}

void SweepSpec::validate() const {
    if (!(p_min < p_max)) throw PreconditionError("sweep: p_min must be < p_max");
    if (steps < 2) throw PreconditionError("sweep: steps must be >= 2");
    if (!(window > 0.0)) throw DomainError("sweep: window must be > 0");
    if (!(tol > 0.0)) throw DomainError("sweep: tol must be > 0");
    params.validate();
}

std::vector<double> momentum_grid(const SweepSpec& spec) {
    spec.validate();
    return linear_grid(spec.p_min, spec.p_max, spec.steps);
}

SweepRow make_row(const RegimeReport& report, SweepMode mode) {
    SweepRow row;
    row.p0 = report.p0;
    row.coupling = report.coupling.value();
    if (report.paper_label) row.paper_label = std::string(to_string(*report.paper_label));
    if (report.selfconsistent_label) {
        row.selfconsistent_label = std::string(to_string(*report.selfconsistent_label));
    }
    if (mode != SweepMode::Paper) row.branch = std::string(to_string(report.branch));
    if (report.fugacity) {
        row.z = report.fugacity->z;
        row.z_prime = report.fugacity->z_prime;
        row.b = report.fugacity->b;
    }
    for (std::string_view name : report.flags.names()) row.flags.emplace_back(name);
    return row;
}

RegimeReport classify_point(double p0, const SweepSpec& spec) {
    switch (spec.mode) {
    case SweepMode::Paper: return classify_paper(p0, spec.window);
    case SweepMode::Self: return classify_selfconsistent(p0, spec.series, spec.tol, spec.params);
    case SweepMode::Both:
        return classify_both(p0, spec.window, spec.series, spec.tol, spec.params);
    }
    throw PreconditionError("sweep: unknown mode");
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
    const std::vector<double> grid = momentum_grid(spec);
    std::vector<SweepRow> rows(grid.size());
    std::vector<std::size_t> index(grid.size());
    std::iota(index.begin(), index.end(), std::size_t{0});
    // Exceptions must not escape a parallel algorithm; park them per point.
    std::vector<std::exception_ptr> failures(grid.size());
    std::for_each(std::execution::par, index.begin(), index.end(), [&](std::size_t i) {
        try {
            rows[i] = make_row(classify_point(grid[i], spec), spec.mode);
        } catch (const DomainError& e) {
            failures[i] = std::make_exception_ptr(SweepPointError(
                "sweep: at p0 = " + format_number(grid[i]) + ": " + e.what(), grid[i]));
        } catch (...) {
            failures[i] = std::current_exception();
        }
    });
    for (const std::exception_ptr& failure : failures) {
        if (failure) std::rethrow_exception(failure);
    }
    return rows;
}

std::string format_number(double x) {
    char buf[64];
    const auto result = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, result.ptr);
}

std::string emit_csv(const std::vector<SweepRow>& rows) {
    std::string out(kCsvHeader);
    out += '\n';
    for (const SweepRow& row : rows) {
        std::string line = format_number(row.p0);
        append_cell(line, std::optional<double>(row.coupling));
        append_cell(line, row.paper_label);
        append_cell(line, row.selfconsistent_label);
        append_cell(line, row.branch);
        append_cell(line, row.z);
        append_cell(line, row.z_prime);
        append_cell(line, row.b);
        line += ',';
        for (std::size_t i = 0; i < row.flags.size(); ++i) {
            if (i) line += '|';
            line += row.flags[i];
        }
        out += line;
        out += '\n';
    }
    return out;
}

std::string emit_json(const std::vector<SweepRow>& rows) {
    ordered_json array = ordered_json::array();
    for (const SweepRow& row : rows) {
        ordered_json obj;
        obj["p0"] = row.p0;
        obj["K"] = row.coupling;
        obj["paper_label"] = nullable(row.paper_label);
        obj["selfconsistent_label"] = nullable(row.selfconsistent_label);
        obj["branch"] = nullable(row.branch);
        obj["z"] = nullable(row.z);
        obj["z_prime"] = nullable(row.z_prime);
        obj["b"] = nullable(row.b);
        obj["flags"] = row.flags;
        array.push_back(std::move(obj));
    }
    return array.dump() + "\n";
}

std::vector<SweepRow> parse_json_rows(std::string_view text) {
    std::vector<SweepRow> rows;
    try {
        const ordered_json array = ordered_json::parse(text);
        for (const ordered_json& obj : array) {
            SweepRow row;
            row.p0 = obj.at("p0").get<double>();
            row.coupling = obj.at("K").get<double>();
            row.paper_label = from_nullable<std::string>(obj.at("paper_label"));
            row.selfconsistent_label = from_nullable<std::string>(obj.at("selfconsistent_label"));
            row.branch = from_nullable<std::string>(obj.at("branch"));
            row.z = from_nullable<double>(obj.at("z"));
            row.z_prime = from_nullable<double>(obj.at("z_prime"));
            row.b = from_nullable<double>(obj.at("b"));
            row.flags = obj.at("flags").get<std::vector<std::string>>();
            rows.push_back(std::move(row));
        }
    } catch (const nlohmann::json::exception& e) {
        throw PreconditionError(std::string("malformed sweep JSON: ") + e.what());
    }
    return rows;
}

std::vector<SweepRow> parse_csv_rows(std::string_view text) {
    std::vector<std::string_view> lines = split(text, '\n');
    if (!lines.empty() && lines.back().empty()) lines.pop_back();
    if (lines.empty() || lines.front() != kCsvHeader) {
        throw PreconditionError("malformed sweep CSV: missing header");
    }
    std::vector<SweepRow> rows;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const std::vector<std::string_view> cells = split(lines[i], ',');
        if (cells.size() != 9) throw PreconditionError("malformed sweep CSV: expected 9 cells");
        SweepRow row;
        row.p0 = parse_number(cells[0]);
        row.coupling = parse_number(cells[1]);
        row.paper_label = optional_text(cells[2]);
        row.selfconsistent_label = optional_text(cells[3]);
        row.branch = optional_text(cells[4]);
        row.z = parse_optional_number(cells[5]);
        row.z_prime = parse_optional_number(cells[6]);
        row.b = parse_optional_number(cells[7]);
        if (!cells[8].empty()) {
            for (std::string_view flag : split(cells[8], '|')) row.flags.emplace_back(flag);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<OccupationPoint> occupation_curve(double z, double beta_eps_min, double beta_eps_max,
                                              int steps, OccupationBranch branch) {
    if (!(beta_eps_min < beta_eps_max)) {
        throw PreconditionError("occupation_curve: beta_eps_min must be < beta_eps_max");
    }
    if (steps < 2) throw PreconditionError("occupation_curve: steps must be >= 2");
    std::vector<OccupationPoint> points;
    points.reserve(static_cast<std::size_t>(steps));
    for (double beta_eps : linear_grid(beta_eps_min, beta_eps_max, steps)) {
        if (branch == OccupationBranch::Fermi) {
            points.push_back({beta_eps, occupation_fermi(z, beta_eps)});
            continue;
        }
        try {
            points.push_back({beta_eps, occupation_bose(z, beta_eps)});
        } catch (const SingularityError& e) {
            throw SingularityError("occupation_curve: singular grid point beta_eps = " +
                                       format_number(beta_eps) + " (z = " + format_number(z) +
                                       ", condensation)",
                                   e.z(), e.beta_eps());
        }
    }
    return points;
}

std::string emit_occupation_csv(const std::vector<OccupationPoint>& points) {
    std::string out = "beta_eps,occupation\n";
    for (const OccupationPoint& p : points) {
        out += format_number(p.beta_eps) + ',' + format_number(p.occupation) + '\n';
    }
    return out;
}

std::string emit_occupation_json(const std::vector<OccupationPoint>& points) {
    ordered_json array = ordered_json::array();
    for (const OccupationPoint& p : points) {
        array.push_back(ordered_json{{"beta_eps", p.beta_eps}, {"occupation", p.occupation}});
    }
    return array.dump() + "\n";
}

} // namespace qgas
