#include "eulnar/gf_check.hpp"

#include "eulnar/combinatorics.hpp"
#include "eulnar/local_ring.hpp"
#include "eulnar/riordan.hpp"

namespace eulnar {

namespace {

const Poly& one_minus_t() {
  static const Poly p(std::vector<Rational>{Rational(1), Rational(-1)});
  return p;
}

}  // namespace

TLocal::TLocal(Poly p, unsigned k) : p_(std::move(p)), k_(k) { normalize(); }

void TLocal::normalize() {
  if (p_.is_zero()) {
    k_ = 0;
    return;
  }
  while (k_ > 0 && sgn(p_.evaluate(Rational(1))) == 0) {
    p_ = divide_by_one_minus_x_pow(p_, 1);
    --k_;
  }
}

TLocal operator+(const TLocal& a, const TLocal& b) {
  unsigned k = std::max(a.k_, b.k_);
  Poly p = a.p_ * one_minus_x_pow(k - a.k_) + b.p_ * one_minus_x_pow(k - b.k_);
  return TLocal(std::move(p), k);
}

std::optional<TLocal> TLocal::inverse() const {
  if (p_.is_zero()) return std::nullopt;
  Poly rest = p_;
  unsigned j = 0;
  while (sgn(rest.evaluate(Rational(1))) == 0) {
    rest = divide_by_one_minus_x_pow(rest, 1);
    ++j;
  }
  if (rest.degree() != Degree(0)) return std::nullopt;
  Rational c = 1 / rest.coeff(0);
  if (k_ >= j) return TLocal(one_minus_x_pow(k_ - j).scaled(c), 0);
  return TLocal(Poly(c), j - k_);
}

std::string TLocal::to_string() const {
  std::string num = p_.to_string("t");
  if (k_ == 0) return num;
  return "(" + num + ")/(1 - t)^" + std::to_string(k_);
}

bool gnp_generating_check(const Series& a, std::size_t nMax, std::string* mismatch) {
  using LocalSeries = TruncatedSeries<TLocal>;
  std::size_t order = nMax + 1;
  if (a.order() < order) throw std::domain_error("gnp_generating_check: series order below nMax + 1");
  // g = x (1 - t a(x))
  std::vector<TLocal> g(order + 1);
  g[1] = TLocal(Poly(Rational(1)));
  for (std::size_t k = 1; k <= order; ++k) g[k] += TLocal(Poly::monomial(1, -a.coeff(k - 1)));
  LocalSeries b = LocalSeries(std::move(g), order).reversion().divide_by_x();

  SeriesPair pair = make_pair(Series::one(a.order()), a);
  for (std::size_t n = 0; n <= nMax; ++n) {
    TLocal rhs = b.coeff(n) * TLocal(one_minus_x_pow(static_cast<unsigned>(2 * n + 1)));
    NumeratorResult gnp = numerator(pair, ArrayFlavor::exponential, n);
    Poly lhs = gnp.numerator.scaled(1 / factorial(static_cast<unsigned>(n + 1)));
    bool ok = gnp.residual_ok && rhs.is_polynomial() && rhs.numerator() == lhs && lhs.degree() <= Degree(n);
    if (!ok) {
      if (mismatch)
        *mismatch = "n=" + std::to_string(n) + ": phi_n(t)/(n+1)! = " + lhs.to_string("t") +
                    ", (1-t)b(x(1-t)^2) coefficient = " + rhs.to_string();
      return false;
    }
  }
  return true;
}

PolySeries narayana_closed_form_gf(std::size_t order) {
  std::size_t o = order + 1;
  Poly t = Poly::x();
  Poly one(Rational(1));
  // 1 - 2x(1+t) + x^2 (1-t)^2
  PolySeries disc(std::vector<Poly>{one, (one + t).scaled(-2), one_minus_t() * one_minus_t()}, o);
  PolySeries num = PolySeries(std::vector<Poly>{one, one_minus_t()}, o) - disc.pow(make_rational(1, 2));
  return num.divide_by_x().scaled(make_rational(1, 2));
}

}  // namespace eulnar
