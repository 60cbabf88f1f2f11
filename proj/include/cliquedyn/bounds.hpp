#pragma once

#include <cstdint>
#include <optional>

#include <boost/rational.hpp>

namespace cliquedyn {

using Rational = boost::rational<std::int64_t>;

std::int64_t binomial(std::int64_t n, std::int64_t r);

/// C(n,3) - nk(n-k-1)/2: triangles of a k-regular graph on n vertices plus
/// triangles of its complement. Throws std::logic_error when nk(n-k-1) is odd
/// (no k-regular graph of that order exists).
std::int64_t lorden_rhs(std::int64_t n, std::int64_t k);

/// Lower bound on the number of independent triples of a k-regular graph:
/// C(n,3) - nk(n-1-k)/2 - nk(k-1)/6, kept exact (it need not be an integer).
Rational cnk_lower_bound(std::int64_t n, std::int64_t k);
/// Smallest integer count compatible with cnk_lower_bound.
std::int64_t cnk_lower_bound_ceil(std::int64_t n, std::int64_t k);

/// C(k,2)(n-2k) + C(k,3): the most independent triples a single vertex of a
/// k-regular graph can be adjacent to. Requires n >= 4k (DomainError).
std::int64_t tnk_upper_bound(std::int64_t n, std::int64_t k);

/// n^2 - 6kn + 7k^2 + k.
std::int64_t a_poly(std::int64_t n, std::int64_t k);

/// Least n with n > 3k + sqrt(2k^2 - k), in integer arithmetic. Requires k >= 1.
std::int64_t helly_threshold(std::int64_t k);

/// The counting argument at (n, k): k * C(n,k) independent-triple incidences
/// are forced from below, at most n * T(n,k) are possible from above.
struct BoundReport {
  std::int64_t n = 0;
  std::int64_t k = 0;
  Rational cnk;
  std::optional<std::int64_t> tnk;  // only for n >= 4k
  std::int64_t a = 0;
  std::int64_t threshold = 0;
  Rational incidence_lo;
  std::optional<std::int64_t> incidence_hi;

  /// incidence_lo > incidence_hi, i.e. no k-regular graph of order n can
  /// have a Helly complement.
  bool contradiction() const { return incidence_hi && incidence_lo > Rational(*incidence_hi); }
};

/// Requires k >= 1 and n > k.
BoundReport bound_report(std::int64_t n, std::int64_t k);

}  // namespace cliquedyn
