#include "matmor/rational.hpp"

#include "matmor/error.hpp"

namespace matmor {

Rat rat_pow(const Rat& base, long e) {
  if (e == 0) return Rat(1);  // 0^0 = 1 in this codebase
  if (base == 0) {
    if (e < 0) throw Error("invalid-argument", "0 raised to a negative power");
    return Rat(0);
  }
  Rat out;
  unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), k);
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), k);
  out.canonicalize();
  if (e < 0) return 1 / out;
  return out;
}

BigInt binomial(unsigned n, unsigned k) {
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

std::string rat_str(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rat rat_parse(const std::string& s) {
  try {
    Rat r(s);
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw Error("schema", "malformed rational '" + s + "'");
  }
}

}  // namespace matmor
