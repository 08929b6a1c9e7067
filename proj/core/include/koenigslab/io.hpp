#ifndef KOENIGSLAB_IO_HPP
#define KOENIGSLAB_IO_HPP

#include <Eigen/Core>
#include <iosfwd>
#include <string>

#include "koenigslab/series.hpp"

namespace koenigslab {

/// 17 significant digits, enough to round-trip an IEEE double exactly. All
/// numeric report output funnels through this so identical runs produce
/// byte-identical files.
std::string fmt_g17(double v);

/// Series file format: {"truncation_order": N, "coeffs": [[re,im], ...]}
/// with exactly N+1 coefficient pairs. Violations raise usage_error.
TaylorSeries load_series_json(const std::string& path);
void save_series_json(const TaylorSeries& s, const std::string& path);

/// Complex CSV cell, "re+imi" / "re-imi".
std::string format_complex_cell(Cx v);

/// Row-major CSV with a "col0,col1,..." header row.
void write_matrix_csv(std::ostream& out, const Eigen::MatrixXcd& m);

}  // namespace koenigslab

#endif  // KOENIGSLAB_IO_HPP
