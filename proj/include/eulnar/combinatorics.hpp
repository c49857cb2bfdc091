#pragma once

#include "eulnar/polynomial.hpp"
#include "eulnar/rational.hpp"

namespace eulnar {

/// Generalized binomial coefficient z(z-1)...(z-k+1)/k!, defined for every
/// rational z.
Rational rat_binomial(const Rational& z, unsigned k);

/// Integer binomial C(n, k) for signed n; zero when k < 0.
Rational binomial(long n, long k);

/// x(x-1)...(x-k+1) as a polynomial in x.
Poly falling_poly(unsigned k);

/// x(x+1)...(x+k-1) as a polynomial in x.
Poly rising_poly(unsigned k);

/// (x+c)_k and [x+c]_k: falling / rising factorials of a shifted argument.
Poly falling_shifted(unsigned k, const Rational& c);
Poly rising_shifted(unsigned k, const Rational& c);

enum class StirlingKind { first, second };

/// Signed Stirling numbers of the first kind s(n,k) (coefficients of the
/// falling factorial) and Stirling numbers of the second kind S(n,k).
/// Throws std::out_of_range unless 0 <= k <= n.
Rational stirling(StirlingKind kind, unsigned n, unsigned k);

/// Mirrors the coefficients of p inside the degree-<=n space:
/// coefficient k of the result is coefficient n-k of p.
/// Throws std::domain_error when deg p > n.
Poly poly_reverse(const Poly& p, unsigned n);

/// (1 - x)^k and (1 + x)^k for non-negative k.
Poly one_minus_x_pow(unsigned k);
Poly one_plus_x_pow(unsigned k);

/// Exact quotient p / (1-x)^m. Throws std::domain_error if the division
/// leaves a remainder.
Poly divide_by_one_minus_x_pow(const Poly& p, unsigned m);

}  // namespace eulnar
