#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "monospline/analysis.hpp"
#include "monospline/approx.hpp"
#include "monospline/partition.hpp"
#include "monospline/spline.hpp"

namespace monospline {

/// %.17g; NaN prints as "nan", infinities as "inf" / "-inf".
std::string format_number(double v);

/// JSON array of knots.
std::string partition_to_json(const Partition& partition);
/// Throws ParseError on malformed input; constructor errors propagate.
Partition partition_from_json(std::string_view text);

/// {"knots": [...], "order": m, "smoothness": l, "pieces": [[local monomial coefficients], ...]}
std::string spline_to_json(const Spline& s);
Spline spline_from_json(std::string_view text);

/// Spline fields plus objective, iterations, optimality_gap, converged and the
/// per-piece certificate status. Non-finite numbers become null.
std::string projection_result_to_json(const ProjectionResult& result);

inline constexpr std::string_view kReportCsvHeader =
    "size,norm,lp_error,sup_global,sup_inner,endpoint_a,endpoint_b,prop3_bound,opt_gap";

/// One line per row under kReportCsvHeader; an absent bound is an empty field.
std::string report_to_csv(const ConvergenceReport& report);
std::string report_to_json(const ConvergenceReport& report);

/// norm followed by every error column, for log-log plots:
/// norm,lp_error,sup_global,sup_inner,endpoint_a_error,endpoint_b_error,prop3_bound
std::string error_curve_csv(const ConvergenceReport& report, const TargetFunction& f);

/// x,f,s,residual on `points` uniform points of the spline's interval.
std::string residual_curve_csv(const TargetFunction& f, const Spline& s, int points = 1001);

/// n,lp_norm,closed_form,sup_norm
std::string counterexample_csv(const std::vector<CounterexampleRow>& rows);

/// Two numeric columns per line; a non-numeric first line is a header.
/// Throws ParseError.
std::vector<std::pair<double, double>> parse_samples_csv(std::string_view text);

/// Whole-file read and write; throw IoError.
std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace monospline
