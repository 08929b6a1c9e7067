#include "koenigslab/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>

#include <nlohmann/json.hpp>

namespace koenigslab {

std::string fmt_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

TaylorSeries load_series_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw usage_error("cannot open series file '" + path + "'");
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw usage_error("series file '" + path + "' is not valid JSON: " + e.what());
  }
  if (!j.is_object() || !j.contains("truncation_order") || !j.contains("coeffs"))
    throw usage_error("series file needs {\"truncation_order\": N, \"coeffs\": [...]}");
  if (!j["truncation_order"].is_number_integer())
    throw usage_error("truncation_order must be an integer");
  const long long n = j["truncation_order"].get<long long>();
  if (n < 0 || n > 1 << 20) throw usage_error("truncation_order out of range");
  const auto& coeffs = j["coeffs"];
  if (!coeffs.is_array() || coeffs.size() != static_cast<size_t>(n) + 1)
    throw usage_error("coeffs must hold exactly truncation_order + 1 [re,im] pairs");
  std::vector<Cx> c;
  c.reserve(coeffs.size());
  for (const auto& pair : coeffs) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number())
      throw usage_error("each coefficient must be a [re, im] pair of numbers");
    const double re = pair[0].get<double>();
    const double im = pair[1].get<double>();
    if (!std::isfinite(re) || !std::isfinite(im))
      throw usage_error("coefficient in series file is not finite");
    c.emplace_back(re, im);
  }
  return TaylorSeries(std::move(c));
}

void save_series_json(const TaylorSeries& s, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw usage_error("cannot open '" + path + "' for writing");
  out << "{\"truncation_order\":" << s.order() << ",\"coeffs\":[";
  for (int k = 0; k < s.size(); ++k) {
    if (k) out << ',';
    out << '[' << fmt_g17(s.coeffs()[k].real()) << ',' << fmt_g17(s.coeffs()[k].imag())
        << ']';
  }
  out << "]}\n";
  if (!out) throw usage_error("write to '" + path + "' failed");
}

std::string format_complex_cell(Cx v) {
  const double im = v.imag();
  std::string out = fmt_g17(v.real());
  if (std::signbit(im)) {
    out += '-';
    out += fmt_g17(-im);
  } else {
    out += '+';
    out += fmt_g17(im);
  }
  out += 'i';
  return out;
}

void write_matrix_csv(std::ostream& out, const Eigen::MatrixXcd& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    if (j) out << ',';
    out << "col" << j;
  }
  out << '\n';
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j) out << ',';
      out << format_complex_cell(m(i, j));
    }
    out << '\n';
  }
}

}  // namespace koenigslab
