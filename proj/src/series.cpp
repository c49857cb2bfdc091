#include "eulnar/series.hpp"

namespace eulnar {

std::vector<Poly> sheffer_rows(const Series& b, const Series& gLog, std::size_t nMax) {
  if (sgn(b.coeff(0)) == 0) throw std::domain_error("sheffer_rows: b(0) must be nonzero");
  if (sgn(gLog.coeff(0)) != 0) throw std::domain_error("sheffer_rows: gLog(0) must be zero");
  if (b.order() < nMax || gLog.order() < nMax)
    throw std::domain_error("sheffer_rows: series order below requested row count");
  // phi * gLog(x) with phi carried as the polynomial variable.
  std::vector<Poly> exponent(nMax + 1);
  for (std::size_t k = 1; k <= nMax; ++k) exponent[k] = Poly::monomial(1, gLog.coeff(k));
  PolySeries gen = lift(b.truncated(nMax)) * PolySeries(std::move(exponent), nMax).exp();
  std::vector<Poly> rows;
  rows.reserve(nMax + 1);
  for (std::size_t n = 0; n <= nMax; ++n) rows.push_back(gen.coeff(n).scaled(factorial(static_cast<unsigned>(n))));
  return rows;
}

}  // namespace eulnar
