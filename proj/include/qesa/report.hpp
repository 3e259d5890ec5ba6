#pragma once

#include <span>
#include <string>
#include <string_view>

#include "qesa/sweep.hpp"

namespace qesa {

inline constexpr std::string_view kCompareHeader =
    "alpha,gamma,beta,e0_analytic,e0_fock,e0_grid,delta_fock,delta_grid";
inline constexpr std::string_view kSurfaceHeader = "alpha,gamma,beta,constraint_residual";

/// 12 significant digits, "%g" style; non-finite values print as
/// "nan", "inf" or "-inf".
std::string format_number(double v);

std::string compare_csv(std::span<const ComparisonRecord> rows);
std::string surface_csv(std::span<const SurfaceRecord> rows);

}  // namespace qesa
