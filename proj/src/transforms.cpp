#include "eulnar/transforms.hpp"

#include <array>
#include <stdexcept>

#include "eulnar/combinatorics.hpp"

namespace eulnar {

namespace {

struct FamilyInfo {
  Family family;
  std::string_view token;
  bool tilde;
};

constexpr std::array<FamilyInfo, 34> kFamilies{{
    {Family::U, "U", false},       {Family::Uinv, "Uinv", false},   {Family::Ut, "Ut", true},
    {Family::Utinv, "Utinv", true}, {Family::V, "V", false},         {Family::Vinv, "Vinv", false},
    {Family::Vt, "Vt", true},       {Family::Vtinv, "Vtinv", true},  {Family::F, "F", false},
    {Family::Finv, "Finv", false},  {Family::Ft, "Ft", true},        {Family::Ftinv, "Ftinv", true},
    {Family::BF, "BF", false},      {Family::BFinv, "BFinv", false}, {Family::S, "S", false},
    {Family::Sinv, "Sinv", false},  {Family::St, "St", true},        {Family::Stinv, "Stinv", true},
    {Family::C, "C", false},        {Family::Cinv, "Cinv", false},   {Family::Ct, "Ct", true},
    {Family::Ctinv, "Ctinv", true}, {Family::Dt, "Dt", true},        {Family::Dtinv, "Dtinv", true},
    {Family::J, "J", false},        {Family::Jt, "Jt", true},        {Family::E, "E", false},
    {Family::R, "R", false},        {Family::Pt, "Pt", false},       {Family::X, "X", false},
    {Family::A, "A", true},         {Family::G, "G", false},         {Family::H, "H", false},
    {Family::T, "T", true},
}};

const FamilyInfo& info(Family f) {
  for (const auto& i : kFamilies)
    if (i.family == f) return i;
  throw std::invalid_argument("unknown operator family");
}

bool adaptive(Family f) { return f == Family::E || f == Family::R || f == Family::Pt; }

Rational fact(std::size_t k) { return factorial(static_cast<unsigned>(k)); }

Rational binom(const Rational& z, long k) {
  if (k < 0) return Rational(0);
  return rat_binomial(z, static_cast<unsigned>(k));
}

Poly monomial(std::size_t p) { return Poly::monomial(p, Rational(1)); }

/// Numerator N of sum_m q(m) x^m = N(x)/(1-x)^e, for deg q < e.
Poly gf_numerator(const Poly& q, unsigned e) {
  if (q.degree() >= std::size_t{e}) throw std::logic_error("gf_numerator: exponent too small");
  std::vector<Rational> c(e, Rational(0));
  for (unsigned k = 0; k < e; ++k)
    for (unsigned j = 0; j <= k; ++j) {
      Rational term = binomial(e, j) * q.evaluate(Rational(k - j));
      c[k] += (j % 2 ? -term : term);
    }
  return Poly(std::move(c));
}

/// A_p via the alternating-sum formula.
Poly euler_explicit(std::size_t p) {
  std::vector<Rational> c(p + 1, Rational(0));
  for (std::size_t k = 0; k <= p; ++k)
    for (std::size_t j = 0; j <= k; ++j) {
      Rational term = binomial(static_cast<long>(p + 1), static_cast<long>(j)) *
                      power(Rational(k - j), static_cast<unsigned>(p));
      c[k] += (j % 2 ? -term : term);
    }
  return Poly(std::move(c));
}

Poly binom_in_m(std::size_t n) {  // C(m+n, n) as a polynomial in m
  return rising_shifted(static_cast<unsigned>(n), Rational(1)).scaled(1 / fact(n));
}

template <class Fn>
FiniteOperator by_columns(std::size_t dim, Fn column) {
  std::vector<Poly> cols;
  cols.reserve(dim);
  for (std::size_t p = 0; p < dim; ++p) cols.push_back(column(p));
  return FiniteOperator::from_columns(cols, dim);
}

template <class Fn>
FiniteOperator diagonal(std::size_t dim, Fn entry) {
  FiniteOperator m(dim);
  for (std::size_t p = 0; p < dim; ++p) m.at(p, p) = entry(p);
  return m;
}

}  // namespace

std::string_view family_token(Family f) { return info(f).token; }

std::optional<Family> parse_family(std::string_view token) {
  for (const auto& i : kFamilies)
    if (i.token == token) return i.family;
  return std::nullopt;
}

const std::vector<Family>& all_families() {
  static const std::vector<Family> fams = [] {
    std::vector<Family> v;
    for (const auto& i : kFamilies) v.push_back(i.family);
    return v;
  }();
  return fams;
}

bool is_tilde(Family f) { return info(f).tilde; }

std::size_t dimension(const MatrixName& name) { return is_tilde(name.family) ? name.n : name.n + 1; }

FiniteOperator shift_power(const Rational& c, std::size_t dim) {
  FiniteOperator m(dim);
  for (std::size_t k = 0; k < dim; ++k)
    for (std::size_t i = 0; i <= k; ++i)
      m.at(i, k) = binomial(static_cast<long>(k), static_cast<long>(i)) * power(c, static_cast<unsigned>(k - i));
  return m;
}

FiniteOperator reflection(std::size_t dim) {
  FiniteOperator m(dim);
  for (std::size_t k = 0; k < dim; ++k) m.at(k, k) = k % 2 ? -1 : 1;
  return m;
}

FiniteOperator binomial_transpose(const Rational& e, std::size_t dim) {
  FiniteOperator m(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i; j < dim; ++j) m.at(i, j) = rat_binomial(e, static_cast<unsigned>(j - i));
  return m;
}

FiniteOperator reversal(std::size_t dim) {
  FiniteOperator m(dim);
  for (std::size_t k = 0; k < dim; ++k) m.at(dim - 1 - k, k) = 1;
  return m;
}

FiniteOperator raising(std::size_t dim) {
  FiniteOperator m(dim + 1, dim);
  for (std::size_t j = 0; j < dim; ++j) m.at(j + 1, j) = 1;
  return m;
}

FiniteOperator lowering(std::size_t dim) { return raising(dim).transpose(); }

FiniteOperator multiplication(const Poly& p, std::size_t rows, std::size_t cols) {
  FiniteOperator m(rows, cols);
  for (std::size_t j = 0; j < cols; ++j)
    for (std::size_t k = 0; k < p.size() && j + k < rows; ++k) m.at(j + k, j) = p.coeff(k);
  return m;
}

FiniteOperator build(const MatrixName& name, std::optional<std::size_t> dim) {
  const std::size_t n = name.n;
  const Family f = name.family;
  if (adaptive(f)) {
    std::size_t d = dim.value_or(n + 1);
    if (d == 0) throw std::invalid_argument("operator size must be positive");
    if (f == Family::E) return shift_power(name.beta, d);
    if (f == Family::R) return reflection(d);
    return binomial_transpose(Rational(n) * name.beta, d);
  }
  if (is_tilde(f) && n < 1) throw std::invalid_argument(std::string(family_token(f)) + " requires n >= 1");
  const std::size_t d = dimension(name);
  const Rational nb = Rational(n) * name.beta;
  const Rational inv_central = fact(n) / fact(2 * n);
  switch (f) {
    case Family::Ut:
      return by_columns(d, [&](std::size_t p) {
        return (one_minus_x_pow(static_cast<unsigned>(n - 1 - p)) * euler_explicit(p + 1).shifted_down(1))
            .scaled(1 / fact(n));
      });
    case Family::Utinv:
      return by_columns(d, [&](std::size_t p) {
        return falling_shifted(static_cast<unsigned>(p), Rational(-1)) *
               rising_shifted(static_cast<unsigned>(n - p - 1), Rational(1));
      });
    case Family::U:
      return by_columns(d, [&](std::size_t p) {
        return (one_minus_x_pow(static_cast<unsigned>(n - p)) * euler_explicit(p)).scaled(1 / fact(n));
      });
    case Family::Uinv:
      return by_columns(d, [&](std::size_t p) {
        return falling_poly(static_cast<unsigned>(p)) * rising_shifted(static_cast<unsigned>(n - p), Rational(1));
      });
    case Family::Vt:
      return by_columns(d, [&](std::size_t p) { return one_plus_x_pow(static_cast<unsigned>(n - p - 1)).shifted_up(p); });
    case Family::Vtinv:
      return by_columns(d, [&](std::size_t p) { return one_minus_x_pow(static_cast<unsigned>(n - p - 1)).shifted_up(p); });
    case Family::V:
      return by_columns(d, [&](std::size_t p) { return one_plus_x_pow(static_cast<unsigned>(n - p)).shifted_up(p); });
    case Family::Vinv:
      return by_columns(d, [&](std::size_t p) { return one_minus_x_pow(static_cast<unsigned>(n - p)).shifted_up(p); });
    case Family::F:
      return by_columns(d, [&](std::size_t p) {
        return gf_numerator(monomial(p) * binom_in_m(n), static_cast<unsigned>(2 * n + 1));
      });
    case Family::Finv:
      return by_columns(d, [&](std::size_t p) {
        return (falling_poly(static_cast<unsigned>(p)) *
                rising_shifted(static_cast<unsigned>(n - p), Rational(n + 1)))
            .scaled(inv_central);
      });
    case Family::Ft:
      return by_columns(d, [&](std::size_t p) {
        return gf_numerator(monomial(p + 1) * binom_in_m(n), static_cast<unsigned>(2 * n + 1)).shifted_down(1);
      });
    case Family::Ftinv:
      return by_columns(d, [&](std::size_t p) {
        return (falling_shifted(static_cast<unsigned>(p), Rational(-1)) *
                rising_shifted(static_cast<unsigned>(n - p - 1), Rational(n + 1)))
            .scaled(inv_central);
      });
    case Family::BF:
      return build({Family::F, n}) * shift_power(Rational(1), d);
    case Family::BFinv:
      return by_columns(d, [&](std::size_t p) {
        return (falling_shifted(static_cast<unsigned>(p), Rational(-1)) *
                rising_shifted(static_cast<unsigned>(n - p), Rational(n)))
            .scaled(inv_central);
      });
    case Family::S:
      return build({Family::F, n}) * build({Family::Uinv, n});
    case Family::Sinv:
      return build({Family::U, n}) * build({Family::Finv, n});
    case Family::St:
      return build({Family::Ft, n}) * build({Family::Utinv, n});
    case Family::Stinv:
      return build({Family::Ut, n}) * build({Family::Ftinv, n});
    case Family::C:
      return diagonal(d, [&](std::size_t p) -> Rational { return fact(n + p) / fact(p); });
    case Family::Cinv:
      return diagonal(d, [&](std::size_t p) -> Rational { return fact(p) / fact(n + p); });
    case Family::Ct:
      return diagonal(d, [&](std::size_t p) -> Rational { return fact(n + p + 1) / fact(p + 1); });
    case Family::Ctinv:
      return diagonal(d, [&](std::size_t p) -> Rational { return fact(p + 1) / fact(n + p + 1); });
    case Family::Dt:
      return diagonal(d, [&](std::size_t p) -> Rational { return Rational(p + 1); });
    case Family::Dtinv:
      return diagonal(d, [&](std::size_t p) -> Rational { return 1 / Rational(p + 1); });
    case Family::J:
    case Family::Jt:
      return reversal(d);
    case Family::X:
      return build({Family::Vinv, n}) * lowering(d).block(d, d) * build({Family::V, n});
    case Family::A:
      return build({Family::Ut, n}) * shift_power(nb, d) * build({Family::Utinv, n});
    case Family::G:
      return build({Family::U, n}) * shift_power(nb, d) * build({Family::Uinv, n});
    case Family::H:
      return build({Family::F, n}) * shift_power(nb, d) * build({Family::Finv, n});
    case Family::T:
      return build({Family::Ft, n}) * shift_power(nb, d) * build({Family::Ftinv, n});
    default:
      break;
  }
  throw std::invalid_argument("unhandled operator family");
}

FiniteOperator build_factored(const MatrixName& name) {
  const std::size_t n = name.n;
  const std::size_t d = dimension(name);
  const Rational nb = Rational(n) * name.beta;
  auto b = [&](Family f) { return build({f, n}); };
  switch (name.family) {
    case Family::A:
      return b(Family::Vtinv) * b(Family::Dt) * binomial_transpose(nb, d) * b(Family::Dtinv) * b(Family::Vt);
    case Family::G:
      return b(Family::Vinv) * binomial_transpose(nb, d) * b(Family::V);
    case Family::S:
      return b(Family::Vinv) * b(Family::C) * b(Family::V);
    case Family::St:
      return b(Family::Vtinv) * b(Family::Ct) * b(Family::Vt);
    case Family::H:
      return b(Family::Vinv) * b(Family::C) * binomial_transpose(nb, d) * b(Family::Cinv) * b(Family::V);
    case Family::T:
      return b(Family::Vtinv) * b(Family::Ct) * b(Family::Dt) * binomial_transpose(nb, d) * b(Family::Dtinv) *
             b(Family::Ctinv) * b(Family::Vt);
    default:
      throw std::invalid_argument(std::string(family_token(name.family)) + " has no factorized form");
  }
}

Poly t_poly(std::size_t m, const Rational& phi, const Rational& beta) {
  std::vector<Rational> c(m + 1);
  for (std::size_t k = 0; k <= m; ++k)
    c[k] = rat_binomial(phi, static_cast<unsigned>(k)) * rat_binomial(beta, static_cast<unsigned>(m - k));
  return Poly(std::move(c));
}

Poly closed_form_column(const MatrixName& name, std::size_t p) {
  const long n = static_cast<long>(name.n);
  const long pl = static_cast<long>(p);
  const Rational nb = Rational(n) * name.beta;
  if (p >= dimension(name)) throw std::out_of_range("column index out of range");
  std::vector<Rational> c(name.n + 1, Rational(0));
  switch (name.family) {
    case Family::S: {
      Rational pre = fact(name.n + p) * fact(name.n - p) / fact(name.n);
      for (long m = pl; m <= n; ++m) c[m] = pre * binomial(n, m - pl) * binomial(n, n - m);
      return Poly(std::move(c));
    }
    case Family::Sinv: {
      Rational pre = fact(p) * fact(name.n - p) / fact(2 * name.n);
      for (long m = pl; m <= n; ++m) c[m] = pre * binomial(-n, m - pl) * binomial(2 * n, n - m);
      return Poly(std::move(c));
    }
    case Family::G: {
      for (long m = 0; m <= n; ++m) c[m] = binom(-nb + pl, m) * binom(nb + n - pl, n - m);
      return Poly(std::move(c));
    }
    case Family::H: {
      Poly acc;
      for (long m = pl; m <= n; ++m) {
        Rational w = binomial(n - pl, n - m) / binomial(n + m, m);
        acc += (one_minus_x_pow(static_cast<unsigned>(n - m)) * t_poly(m, -nb + n + m, nb)).scaled(w);
      }
      return acc;
    }
    case Family::T: {
      Poly acc;
      for (long m = pl; m <= n - 1; ++m) {
        Rational w = binomial(n - 1 - pl, n - 1 - m) / binomial(n + 1 + m, m);
        acc += (one_minus_x_pow(static_cast<unsigned>(n - m - 1)) * t_poly(m, -nb + n + m + 1, nb)).scaled(w);
      }
      return acc;
    }
    default:
      throw std::invalid_argument(std::string(family_token(name.family)) + " has no closed-form column");
  }
}

Poly corner_column(const MatrixName& name, bool last) {
  const long n = static_cast<long>(name.n);
  const Rational nb = Rational(n) * name.beta;
  std::vector<Rational> c(name.n + 1, Rational(0));
  if (name.family == Family::H) {
    Rational pre = 1 / binomial(2 * n, n);
    for (long m = 0; m <= n; ++m)
      c[m] = pre * (last ? binom(-nb + 2 * n, m) * binom(nb, n - m) : binom(-nb, m) * binom(nb + 2 * n, n - m));
    return Poly(std::move(c));
  }
  if (name.family == Family::T) {
    if (n < 1) throw std::invalid_argument("T requires n >= 1");
    Rational pre = 1 / binomial(2 * n, n - 1);
    for (long m = 0; m <= n - 1; ++m)
      c[m] = pre * (last ? binom(Rational(n) * (2 - name.beta), m) * binom(nb, n - 1 - m)
                         : binom(-nb, m) * binom(Rational(n) * (2 + name.beta), n - 1 - m));
    return Poly(std::move(c));
  }
  throw std::invalid_argument("corner columns exist only for H and T");
}

FiniteOperator reduce_conjugation(const MatrixName& name, std::size_t m) {
  if (name.family != Family::A && name.family != Family::G)
    throw std::invalid_argument("reduce_conjugation applies to A and G");
  if (m >= name.n) throw std::out_of_range("reduction order must be below n");
  FiniteOperator op = build(name);
  if (m == 0) return op;
  std::size_t reduced = op.dim() - m;
  Poly factor = one_minus_x_pow(static_cast<unsigned>(m));
  std::vector<Poly> cols;
  for (std::size_t p = 0; p < reduced; ++p)
    cols.push_back(divide_by_one_minus_x_pow(op.apply(factor.shifted_up(p)), static_cast<unsigned>(m)));
  return FiniteOperator::from_columns(cols, reduced);
}

bool shift_relations_check(std::size_t n) {
  if (n < 1) throw std::invalid_argument("shift relations need n >= 1");
  FiniteOperator ut = build({Family::Ut, n});
  FiniteOperator u = build({Family::U, n});
  FiniteOperator up = raising(n);
  FiniteOperator down = lowering(n);
  if (!(down * u * up == ut)) return false;
  // U_n E (x,x) I_{n-1}: image lands in degree < n, so the top row block must match.
  FiniteOperator second = u * shift_power(Rational(1), n + 1) * up;
  for (std::size_t j = 0; j < n; ++j)
    if (sgn(second.at(n, j)) != 0) return false;
  return second.block(n, n) == ut;
}

FiniteOperator evaluate_matrix_expression(std::string_view text, std::size_t n, const Rational& beta) {
  std::vector<Family> factors;
  std::size_t start = 0;
  while (true) {
    std::size_t star = text.find('*', start);
    std::string_view tok = text.substr(start, star == std::string_view::npos ? std::string_view::npos : star - start);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    auto fam = parse_family(tok);
    if (!fam) throw std::invalid_argument("unknown matrix name '" + std::string(tok) + "'");
    factors.push_back(*fam);
    if (star == std::string_view::npos) break;
    start = star + 1;
  }
  std::optional<std::size_t> fixed;
  for (Family f : factors) {
    if (adaptive(f)) continue;
    std::size_t d = dimension({f, n, beta});
    if (fixed && *fixed != d) throw std::invalid_argument("matrix sizes in product do not agree");
    fixed = d;
  }
  std::size_t d = fixed.value_or(n + 1);
  FiniteOperator acc = FiniteOperator::identity(d);
  for (Family f : factors) acc = acc * build({f, n, beta}, d);
  return acc;
}

}  // namespace eulnar
