#include "operadforge/prime_field.hpp"

namespace operadforge {

PrimeField::Elem PrimeField::inv(Elem a) const {
  if (a == 0) throw std::domain_error("PrimeField::inv of zero");
  // extended Euclid on signed 128-bit intermediates
  __int128 t = 0, newt = 1;
  __int128 r = static_cast<__int128>(p), newr = static_cast<__int128>(a);
  while (newr != 0) {
    __int128 q = r / newr;
    __int128 tmp = t - q * newt;
    t = newt;
    newt = tmp;
    tmp = r - q * newr;
    r = newr;
    newr = tmp;
  }
  if (t < 0) t += static_cast<__int128>(p);
  return static_cast<Elem>(t);
}

std::optional<PrimeField::Elem> PrimeField::from_rat(const Rat& q) const {
  std::uint64_t den = mpz_fdiv_ui(q.get_den().get_mpz_t(), p);
  if (den == 0) return std::nullopt;
  std::uint64_t num = mpz_fdiv_ui(q.get_num().get_mpz_t(), p);
  return mul(num, inv(den));
}

bool is_probable_prime(std::uint64_t n) {
  mpz_class z(static_cast<unsigned long>(n));
  return mpz_probab_prime_p(z.get_mpz_t(), 40) != 0;
}

std::vector<std::uint64_t> default_rank_primes() {
  // first two primes above 2^31
  return {2147483659ULL, 2147483693ULL};
}

}  // namespace operadforge
