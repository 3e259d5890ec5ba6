#include "qesa/report.hpp"

#include <cmath>
#include <cstdio>
#include <initializer_list>

namespace qesa {

namespace {

void append_row(std::string& out, std::initializer_list<double> values) {
  bool first = true;
  for (double v : values) {
    if (!first) out += ',';
    out += format_number(v);
    first = false;
  }
  out += '\n';
}

}  // namespace

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v == 0.0) return "0";  // folds -0
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string compare_csv(std::span<const ComparisonRecord> rows) {
  std::string out(kCompareHeader);
  out += '\n';
  for (const auto& r : rows) {
    append_row(out, {r.alpha, r.gamma, r.beta, r.e0_analytic, r.e0_fock, r.e0_grid, r.delta_fock,
                     r.delta_grid});
  }
  return out;
}

std::string surface_csv(std::span<const SurfaceRecord> rows) {
  std::string out(kSurfaceHeader);
  out += '\n';
  for (const auto& r : rows) append_row(out, {r.alpha, r.gamma, r.beta, r.constraint_residual});
  return out;
}

}  // namespace qesa
