#pragma once

#include <cstddef>

#include "eulnar/polynomial.hpp"
#include "eulnar/series.hpp"

namespace eulnar {

/// _(beta)a^phi: coefficient n is phi/(phi+n beta) u_n(phi+n beta)/n!, with u_n
/// the rows of (1, log a)_{e^x}. The quotient is taken on u_n(x)/x, which is a
/// polynomial for n >= 1, so phi + n beta = 0 needs no special case.
Series lagrange_associate(const Series& a, const Rational& beta, const Rational& phi = 1);

/// The generalized binomial series _(beta)(1+x)^phi from its closed form.
Series generalized_binomial(const Rational& beta, const Rational& phi, std::size_t order);

/// (1/n) sum_m C(n(1-beta), m-1) C(n beta, n-m) x^m; 1 for n = 0.
Poly gep_closed_form(const Rational& beta, std::size_t n);
/// ((n+1)!/n) sum_m C(n(2-beta), m-1) C(n beta, n-m) x^m; 1 for n = 0.
Poly gnp_closed_form(const Rational& beta, std::size_t n);

/// x (log f)'; keeps the order of f.
Series x_log_derivative(const Series& f);

/// b(x _(beta)a^beta(x)) (1 + x beta (log _(beta)a(x))').
Series beta_prefactor(const Series& a, const Series& b, const Rational& beta);

/// sum_{n<=N} _(beta)u_n(phi) _(beta)q_n(x) - 1/(1 - phi x) through x^N, where
/// _(beta)q_n(x) = (1+n beta x)^{-1} q_n(x/(1+n beta x)) and q_n are the
/// columns of (1, q)_{e^x}, q the reversion of log a. Each q_n starts at x^n,
/// so the truncated sum is exact through x^N and the residual must vanish.
Series dual_basis_residual(const Series& a, const Rational& beta, const Rational& phi, std::size_t N);

/// Column n of (1, g)_{e^x}: coefficient i is (i!/n!) [x^i] g^n.
Series exponential_column(const Series& g, std::size_t n);

/// Checks (1, x _(beta)a^phi)^{-1} = (1, x _(beta-phi)a^{-phi}) and the
/// prefactored companion through x^N.
bool inverse_pair_check(const Series& a, const Rational& phi, const Rational& beta, std::size_t N);

}  // namespace eulnar
