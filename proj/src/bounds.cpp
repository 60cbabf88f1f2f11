#include "cliquedyn/bounds.hpp"

#include <stdexcept>
#include <string>

#include "cliquedyn/errors.hpp"

namespace cliquedyn {

std::int64_t binomial(std::int64_t n, std::int64_t r) {
  if (r < 0 || n < 0 || r > n) return 0;
  r = std::min(r, n - r);
  std::int64_t out = 1;
  for (std::int64_t i = 1; i <= r; ++i) out = out * (n - r + i) / i;
  return out;
}

std::int64_t lorden_rhs(std::int64_t n, std::int64_t k) {
  if (k < 0 || k >= n) throw DomainError("lorden_rhs: need 0 <= k < n");
  const std::int64_t twice = n * k * (n - k - 1);
  if (twice % 2 != 0)
    throw std::logic_error("lorden_rhs: nk(n-k-1) is odd for n=" + std::to_string(n) +
                           ", k=" + std::to_string(k) + "; no k-regular graph exists");
  return binomial(n, 3) - twice / 2;
}

Rational cnk_lower_bound(std::int64_t n, std::int64_t k) {
  if (k < 0 || k >= n) throw DomainError("cnk_lower_bound: need 0 <= k < n");
  return Rational(binomial(n, 3)) - Rational(n * k * (n - 1 - k), 2) -
         Rational(n * k * (k - 1), 6);
}

std::int64_t cnk_lower_bound_ceil(std::int64_t n, std::int64_t k) {
  const Rational c = cnk_lower_bound(n, k);
  std::int64_t q = c.numerator() / c.denominator();
  if (q * c.denominator() < c.numerator()) ++q;
  return q;
}

std::int64_t tnk_upper_bound(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 4 * k)
    throw DomainError("tnk_upper_bound: requires n >= 4k (n=" + std::to_string(n) +
                      ", k=" + std::to_string(k) + ")");
  return binomial(k, 2) * (n - 2 * k) + binomial(k, 3);
}

std::int64_t a_poly(std::int64_t n, std::int64_t k) { return n * n - 6 * k * n + 7 * k * k + k; }

std::int64_t helly_threshold(std::int64_t k) {
  if (k < 1) throw DomainError("helly_threshold: requires k >= 1");
  const std::int64_t disc = 2 * k * k - k;
  std::int64_t d = 1;
  while (d * d <= disc) ++d;
  return 3 * k + d;
}

BoundReport bound_report(std::int64_t n, std::int64_t k) {
  if (k < 1 || n <= k) throw DomainError("bound_report: requires 1 <= k < n");
  BoundReport r;
  r.n = n;
  r.k = k;
  r.cnk = cnk_lower_bound(n, k);
  r.a = a_poly(n, k);
  r.threshold = helly_threshold(k);
  r.incidence_lo = r.cnk * k;
  if (n >= 4 * k) {
    r.tnk = tnk_upper_bound(n, k);
    r.incidence_hi = n * *r.tnk;
  }
  return r;
}

}  // namespace cliquedyn
