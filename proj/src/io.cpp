#include "monospline/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "monospline/errors.hpp"

namespace monospline {

namespace {

using nlohmann::json;

json number(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

json spline_json(const Spline& s) {
    json pieces = json::array();
    for (const auto& p : s.pieces()) {
        json c = json::array();
        for (double v : p.coeffs()) c.push_back(number(v));
        pieces.push_back(std::move(c));
    }
    json knots = json::array();
    for (double k : s.partition().knots()) knots.push_back(k);
    return {{"knots", knots}, {"order", s.order()}, {"smoothness", s.smoothness()}, {"pieces", pieces}};
}

json parse(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

std::vector<double> number_array(const json& j, const char* what) {
    if (!j.is_array()) throw ParseError(std::string(what) + " must be an array of numbers");
    std::vector<double> out;
    out.reserve(j.size());
    for (const auto& v : j) {
        if (!v.is_number()) throw ParseError(std::string(what) + " must be an array of numbers");
        out.push_back(v.get<double>());
    }
    return out;
}

std::string csv_line(std::initializer_list<std::string> fields) {
    std::string out;
    bool first = true;
    for (const auto& f : fields) {
        if (!first) out += ',';
        out += f;
        first = false;
    }
    out += '\n';
    return out;
}

bool parse_double(std::string_view token, double& out) {
    const std::string s(token);
    if (s.empty()) return false;
    char* end = nullptr;
    out = std::strtod(s.c_str(), &end);
    return end == s.c_str() + s.size();
}

std::string trim(std::string_view s) {
    const auto lo = s.find_first_not_of(" \t\r");
    if (lo == std::string_view::npos) return {};
    const auto hi = s.find_last_not_of(" \t\r");
    return std::string(s.substr(lo, hi - lo + 1));
}

}  // namespace

std::string format_number(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0.0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string partition_to_json(const Partition& partition) {
    json knots = json::array();
    for (double k : partition.knots()) knots.push_back(k);
    return knots.dump();
}

Partition partition_from_json(std::string_view text) { return Partition(number_array(parse(text), "knots")); }

std::string spline_to_json(const Spline& s) { return spline_json(s).dump(2); }

Spline spline_from_json(std::string_view text) {
    const json j = parse(text);
    if (!j.is_object()) throw ParseError("spline JSON must be an object");
    for (const char* key : {"knots", "order", "smoothness", "pieces"}) {
        if (!j.contains(key)) throw ParseError(std::string("spline JSON lacks '") + key + "'");
    }
    if (!j["order"].is_number_integer() || !j["smoothness"].is_number_integer()) {
        throw ParseError("order and smoothness must be integers");
    }
    if (!j["pieces"].is_array()) throw ParseError("pieces must be an array");
    std::vector<Polynomial> pieces;
    for (const auto& p : j["pieces"]) pieces.emplace_back(number_array(p, "piece"));
    return Spline(Partition(number_array(j["knots"], "knots")), std::move(pieces), j["order"].get<int>(),
                  j["smoothness"].get<int>());
}

std::string projection_result_to_json(const ProjectionResult& result) {
    json j = spline_json(result.spline.spline);
    j["orientation"] =
        result.spline.orientation == Orientation::Nondecreasing ? "nondecreasing" : "nonincreasing";
    json certs = json::array();
    for (const auto& c : result.spline.certificates) certs.push_back(to_string(c.status));
    j["certificates"] = certs;
    j["objective"] = number(result.objective);
    j["iterations"] = result.iterations;
    j["optimality_gap"] = number(result.optimality_gap);
    j["converged"] = result.converged;
    return j.dump(2);
}

std::string report_to_csv(const ConvergenceReport& report) {
    std::string out(kReportCsvHeader);
    out += '\n';
    for (const auto& r : report.rows) {
        out += csv_line({std::to_string(r.partition_size), format_number(r.partition_norm), format_number(r.lp_error),
                         format_number(r.sup_error_global), format_number(r.sup_error_inner),
                         format_number(r.endpoint_a), format_number(r.endpoint_b),
                         r.prop3_bound ? format_number(*r.prop3_bound) : std::string(),
                         format_number(r.optimality_gap)});
    }
    return out;
}

std::string report_to_json(const ConvergenceReport& report) {
    const ApproxConfig& c = report.config;
    json config = {{"p", c.p},
                   {"m", c.m},
                   {"l", c.l},
                   {"partition", report.partition_kind},
                   {"inner", {report.inner.lo, report.inner.hi}},
                   {"solver_tolerance", c.solver_tolerance},
                   {"elevation_budget", c.elevation_budget},
                   {"quadrature_points_per_piece", c.quadrature_points_per_piece}};
    json rows = json::array();
    for (const auto& r : report.rows) {
        rows.push_back({{"size", r.partition_size},
                        {"norm", number(r.partition_norm)},
                        {"lp_error", number(r.lp_error)},
                        {"sup_global", number(r.sup_error_global)},
                        {"sup_inner", number(r.sup_error_inner)},
                        {"endpoint_a", number(r.endpoint_a)},
                        {"endpoint_b", number(r.endpoint_b)},
                        {"prop3_bound", r.prop3_bound ? number(*r.prop3_bound) : json(nullptr)},
                        {"opt_gap", number(r.optimality_gap)},
                        {"converged", r.converged}});
    }
    return json{{"function", report.function_id}, {"config", config}, {"rows", rows}}.dump(2);
}

std::string error_curve_csv(const ConvergenceReport& report, const TargetFunction& f) {
    std::string out = "norm,lp_error,sup_global,sup_inner,endpoint_a_error,endpoint_b_error,prop3_bound\n";
    const double fa = f(f.domain.lo);
    const double fb = f(f.domain.hi);
    for (const auto& r : report.rows) {
        out += csv_line({format_number(r.partition_norm), format_number(r.lp_error), format_number(r.sup_error_global),
                         format_number(r.sup_error_inner), format_number(std::abs(r.endpoint_a - fa)),
                         format_number(std::abs(r.endpoint_b - fb)),
                         r.prop3_bound ? format_number(*r.prop3_bound) : std::string()});
    }
    return out;
}

std::string residual_curve_csv(const TargetFunction& f, const Spline& s, int points) {
    const Interval iv = s.partition().interval();
    std::string out = "x,f,s,residual\n";
    for (int i = 0; i < points; ++i) {
        const double x = i == points - 1 ? iv.hi : iv.lo + iv.length() * i / (points - 1);
        const double fx = f(x);
        const double sx = s(x);
        out += csv_line({format_number(x), format_number(fx), format_number(sx), format_number(fx - sx)});
    }
    return out;
}

std::string counterexample_csv(const std::vector<CounterexampleRow>& rows) {
    std::string out = "n,lp_norm,closed_form,sup_norm\n";
    for (const auto& r : rows) {
        out += csv_line({std::to_string(r.n), format_number(r.lp_norm), format_number(r.closed_form),
                         format_number(r.sup_norm)});
    }
    return out;
}

std::vector<std::pair<double, double>> parse_samples_csv(std::string_view text) {
    std::vector<std::pair<double, double>> out;
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        const auto sep = t.find_first_of(",;\t ");
        double x = 0.0;
        double y = 0.0;
        const bool ok = sep != std::string::npos && parse_double(trim(t.substr(0, sep)), x) &&
                        parse_double(trim(t.substr(sep + 1)), y);
        if (!ok) {
            double first = 0.0;
            const bool numeric_head = parse_double(trim(t.substr(0, sep)), first);
            if (line_no == 1 && !numeric_head) continue;  // header
            throw ParseError("line " + std::to_string(line_no) + ": expected two numbers 'x,y'");
        }
        out.emplace_back(x, y);
    }
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "' for reading");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, std::string_view contents) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out) throw IoError("failed writing '" + path + "'");
}

}  // namespace monospline
