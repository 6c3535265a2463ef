#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace kreweras {

// Arbitrary-precision count. Every count produced by the library is
// nonnegative.
using BigCount = boost::multiprecision::cpp_int;

// Quotient of an exact division; throws Error{InexactDivision} otherwise.
BigCount exact_divide(const BigCount& numerator, const BigCount& denominator);

// C(a, b), zero when b < 0 or b > a. Rows up to kBinomialCacheRows are served
// from a shared Pascal triangle that grows on demand.
BigCount binomial(std::uint64_t a, std::int64_t b);

inline constexpr std::uint64_t kBinomialCacheRows = 4096;

// (1/n) C(n,k) C(n,k-1); zero for k <= 0 or k > n, and N(0,0) = 1.
BigCount narayana(std::uint64_t n, std::int64_t k);

BigCount catalan(std::uint64_t n);

// Kreweras's original display:
//   (1/(n+r+1)) C(n+r+1, r) C(n+r+1, n)
//     = sum_{s=0..r} (1/n) C(n, r-s) C(n, r-s+1) C(2n+s, 2n).
// Both require n >= 1.
BigCount kreweras_lhs(std::uint64_t n, std::uint64_t r);
BigCount kreweras_rhs(std::uint64_t n, std::uint64_t r);

// The shifted form: N(n+r, r) = sum_{s=1..r} N(n,s) C(2n+r-s, r-s).
// Both require n >= 1 and r >= 1.
BigCount star_lhs(std::uint64_t n, std::uint64_t r);

struct IdentityReport {
  std::uint64_t n = 0;
  std::uint64_t r = 0;
  BigCount lhs;
  BigCount rhs;
  std::vector<std::pair<std::int64_t, BigCount>> per_s_terms;
  bool equal = false;
};

IdentityReport star_rhs(std::uint64_t n, std::uint64_t r);

// Same report shape for the original display; terms run over s = 0..r.
IdentityReport kreweras_report(std::uint64_t n, std::uint64_t r);

// Number of Dyck (n+r)-paths with r peaks and exactly s peak plateaus, as
// predicted by peak deletion: N(n,s) C(2n+r-s, r-s).
BigCount refined_count(std::uint64_t n, std::uint64_t r, std::int64_t s);

}  // namespace kreweras
