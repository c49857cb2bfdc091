#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eulnar/finite_operator.hpp"
#include "eulnar/polynomial.hpp"
#include "eulnar/rational.hpp"

namespace eulnar {

enum class Family {
  U, Uinv, Ut, Utinv,
  V, Vinv, Vt, Vtinv,
  F, Finv, Ft, Ftinv,
  BF, BFinv,
  S, Sinv, St, Stinv,
  C, Cinv, Ct, Ctinv,
  Dt, Dtinv,
  J, Jt,
  E, R, Pt, X,
  A, G, H, T,
};

/// A named operator: family plus index n and parameter beta. beta is the
/// exponent for E, and the index scale for Pt, A, G, H, T (which use n beta).
struct MatrixName {
  Family family;
  std::size_t n;
  Rational beta = 1;
};

std::string_view family_token(Family f);
std::optional<Family> parse_family(std::string_view token);
const std::vector<Family>& all_families();

/// Acts on degree < n (tilde families, A, T) or degree <= n (the rest).
bool is_tilde(Family f);
std::size_t dimension(const MatrixName& name);

/// Definitional construction. E, R and Pt take their size from dim when
/// given; otherwise from the plain convention n + 1.
FiniteOperator build(const MatrixName& name, std::optional<std::size_t> dim = std::nullopt);

/// Elementary pieces with explicit sizes.
FiniteOperator shift_power(const Rational& c, std::size_t dim);     // E^c
FiniteOperator reflection(std::size_t dim);                         // (1, -x)
FiniteOperator binomial_transpose(const Rational& e, std::size_t dim);  // ((1+x)^e, x)^T
FiniteOperator reversal(std::size_t dim);                           // J
FiniteOperator raising(std::size_t dim);   // (x, x): degree < dim into degree <= dim
FiniteOperator lowering(std::size_t dim);  // (x, x)^T: degree <= dim into degree < dim
FiniteOperator multiplication(const Poly& p, std::size_t rows, std::size_t cols);

/// Second construction path through the factorized forms:
/// A = Vt^-1 Dt Pt Dt^-1 Vt, G = V^-1 Pt V, S = V^-1 C V, St = Vt^-1 Ct Vt,
/// H = V^-1 C Pt C^-1 V, T = Vt^-1 Ct Dt Pt Dt^-1 Ct^-1 Vt.
FiniteOperator build_factored(const MatrixName& name);

/// Column p from binomial sums only (S, Sinv, G, H, T).
Poly closed_form_column(const MatrixName& name, std::size_t p);

/// The extreme columns of H (p = n and p = 0) and T (p = n-1 and p = 0)
/// from their single-sum forms.
Poly corner_column(const MatrixName& name, bool last);

/// t_m(phi | beta, x) = sum_k C(phi, k) C(beta, m-k) x^k
Poly t_poly(std::size_t m, const Rational& phi, const Rational& beta);

/// ((1-x)^{-m}, x) M ((1-x)^m, x) restricted to the reduced space, for M = A_n^beta
/// or G_n^beta. Throws std::domain_error when an image is not divisible by (1-x)^m.
FiniteOperator reduce_conjugation(const MatrixName& name, std::size_t m);

/// Both shift identities linking U_n and Ut_n.
bool shift_relations_check(std::size_t n);

/// Evaluates a product of operator tokens such as "Vt*Ut" at index n.
/// E, R and Pt adopt the size of the fixed-size tokens.
FiniteOperator evaluate_matrix_expression(std::string_view text, std::size_t n, const Rational& beta);

}  // namespace eulnar
