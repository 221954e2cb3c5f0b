#include "winfty/rational.hpp"

namespace winfty {

Rational Rational::parse(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("Rational::parse: empty string");
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      return Rational(mpz_class(s));
    }
    mpz_class num(s.substr(0, slash));
    mpz_class den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("Rational::parse: zero denominator");
    mpq_class q(num, den);
    return Rational(q);
  } catch (const std::invalid_argument&) {
    throw;
  } catch (const std::exception&) {
    throw std::invalid_argument("Rational::parse: bad literal '" + s + "'");
  }
}

std::string Rational::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational factorial(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational(f);
}

Rational gen_binomial(const Rational& x, unsigned r) {
  if (r == 0) return Rational(1);
  Rational acc(1);
  for (unsigned i = 0; i < r; ++i) acc *= x - Rational(static_cast<long>(i));
  return acc / factorial(r);
}

Rational int_binomial(long m, unsigned r) {
  return Rational(falling_factorial(m, r)) / factorial(r);
}

std::vector<Rational> falling_factorial_coeffs(unsigned l) {
  // expand D(D-1)...(D-l+1) by convolving one linear factor at a time
  std::vector<Rational> coeffs{Rational(1)};
  for (unsigned j = 0; j < l; ++j) {
    std::vector<Rational> next(coeffs.size() + 1, Rational(0));
    const Rational shift(-static_cast<long>(j));
    for (size_t i = 0; i < coeffs.size(); ++i) {
      next[i + 1] += coeffs[i];
      next[i] += coeffs[i] * shift;
    }
    coeffs = std::move(next);
  }
  return coeffs;
}

mpz_class falling_factorial(long x, unsigned j) {
  mpz_class acc(1);
  for (unsigned i = 0; i < j; ++i) acc *= mpz_class(x - static_cast<long>(i));
  return acc;
}

}  // namespace winfty
