#pragma once

#include <cstddef>
#include <string>

#include "eulnar/series.hpp"

namespace eulnar {

/// Compares sum phi_n(t) x^n/(n+1)! with (1-t) b(x(1-t)^2) through x^nMax,
/// where (1, x b(x)) is the inverse of (1, x(1 - t a(x))) and phi_n are the
/// exponential numerators of (1, x a(x)). On failure, *mismatch describes the
/// first differing coefficient.
bool gnp_generating_check(const Series& a, std::size_t nMax, std::string* mismatch = nullptr);

/// (1 + x(1-t) - sqrt(1 - 2x(1+t) + x^2(1-t)^2)) / 2x through x^order.
PolySeries narayana_closed_form_gf(std::size_t order);

}  // namespace eulnar
