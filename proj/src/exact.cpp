#include "qseal/exact.hpp"

#include <stdexcept>

namespace qseal {

BigInt binomial(std::uint64_t n, std::uint64_t k) {
  BigInt out;
  if (k > n) return out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

BigInt pow2(std::uint64_t exponent) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), 2, exponent);
  return out;
}

std::string to_fraction_string(const Rational& value) {
  Rational v = value;
  v.canonicalize();
  return v.get_str();
}

Rational parse_fraction(const std::string& text) {
  Rational out;
  if (out.set_str(text, 10) != 0) throw std::invalid_argument("not a fraction: " + text);
  out.canonicalize();
  return out;
}

}  // namespace qseal
