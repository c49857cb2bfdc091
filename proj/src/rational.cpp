#include "eulnar/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace eulnar {

Rational make_rational(long num, long den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::optional<Rational> parse_rational(std::string_view text) {
  if (text.empty()) return std::nullopt;
  std::size_t i = 0;
  bool negative = false;
  if (text[0] == '-' || text[0] == '+') {
    negative = text[0] == '-';
    i = 1;
  }
  auto digits = [&](std::size_t from) {
    std::size_t j = from;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    return j;
  };
  std::size_t num_end = digits(i);
  if (num_end == i) return std::nullopt;
  Integer num(std::string(text.substr(i, num_end - i)), 10);
  Integer den = 1;
  if (num_end < text.size()) {
    if (text[num_end] != '/') return std::nullopt;
    std::size_t den_end = digits(num_end + 1);
    if (den_end == num_end + 1 || den_end != text.size()) return std::nullopt;
    den = Integer(std::string(text.substr(num_end + 1, den_end - num_end - 1)), 10);
    if (den == 0) return std::nullopt;
  }
  if (negative) num = -num;
  return make_rational(num, den);
}

Rational factorial(unsigned n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational(f);
}

Rational power(const Rational& q, unsigned k) {
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), q.get_num_mpz_t(), k);
  mpz_pow_ui(den.get_mpz_t(), q.get_den_mpz_t(), k);
  return Rational(num, den);
}

std::optional<long> as_long(const Rational& q) {
  if (q.get_den() != 1 || !q.get_num().fits_slong_p()) return std::nullopt;
  return q.get_num().get_si();
}

}  // namespace eulnar
