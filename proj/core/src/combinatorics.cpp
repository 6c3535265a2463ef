#include "kreweras/combinatorics.hpp"

#include <deque>
#include <mutex>
#include <shared_mutex>
#include <string>

#include "kreweras/error.hpp"

namespace kreweras {

namespace {

// Half rows of Pascal's triangle: row a stores C(a, 0..a/2). Rows are only
// appended, and std::deque keeps references to existing rows valid across
// push_back, so readers can hold a reference after dropping the lock.
class PascalCache {
 public:
  const BigCount& get(std::uint64_t a, std::uint64_t b) {
    if (2 * b > a) {
      b = a - b;
    }
    {
      std::shared_lock lock(mutex_);
      if (a < rows_.size()) {
        return rows_[a][b];
      }
    }
    std::unique_lock lock(mutex_);
    while (rows_.size() <= a) {
      append_row();
    }
    return rows_[a][b];
  }

 private:
  void append_row() {
    const std::uint64_t a = rows_.size();
    std::vector<BigCount> row(a / 2 + 1);
    row[0] = 1;
    for (std::uint64_t b = 1; b < row.size(); ++b) {
      // C(a,b) = C(a-1,b-1) + C(a-1,b), folding indices past the half row.
      const auto& prev = rows_[a - 1];
      const std::uint64_t left = b - 1;
      const std::uint64_t right = 2 * b > a - 1 ? a - 1 - b : b;
      row[b] = prev[left] + prev[right];
    }
    rows_.push_back(std::move(row));
  }

  std::shared_mutex mutex_;
  std::deque<std::vector<BigCount>> rows_;
};

PascalCache& pascal_cache() {
  static PascalCache cache;
  return cache;
}

BigCount binomial_multiplicative(std::uint64_t a, std::uint64_t b) {
  if (2 * b > a) {
    b = a - b;
  }
  BigCount result = 1;
  for (std::uint64_t i = 1; i <= b; ++i) {
    result *= a - b + i;
    result = exact_divide(result, i);
  }
  return result;
}

void require_positive(std::uint64_t value, const char* what) {
  if (value == 0) {
    throw Error(ErrorCode::InvalidArgument, std::string(what) + " must be >= 1");
  }
}

}  // namespace

BigCount exact_divide(const BigCount& numerator, const BigCount& denominator) {
  if (denominator == 0) {
    throw Error(ErrorCode::InexactDivision, "division by zero");
  }
  BigCount quotient;
  BigCount remainder;
  boost::multiprecision::divide_qr(numerator, denominator, quotient, remainder);
  if (remainder != 0) {
    throw Error(ErrorCode::InexactDivision,
                numerator.str() + " / " + denominator.str());
  }
  return quotient;
}

BigCount binomial(std::uint64_t a, std::int64_t b) {
  if (b < 0 || static_cast<std::uint64_t>(b) > a) {
    return 0;
  }
  const auto k = static_cast<std::uint64_t>(b);
  if (a < kBinomialCacheRows) {
    return pascal_cache().get(a, k);
  }
  return binomial_multiplicative(a, k);
}

BigCount narayana(std::uint64_t n, std::int64_t k) {
  if (n == 0) {
    return k == 0 ? 1 : 0;
  }
  if (k <= 0 || static_cast<std::uint64_t>(k) > n) {
    return 0;
  }
  return exact_divide(binomial(n, k) * binomial(n, k - 1), n);
}

BigCount catalan(std::uint64_t n) {
  return exact_divide(binomial(2 * n, static_cast<std::int64_t>(n)), n + 1);
}

BigCount kreweras_lhs(std::uint64_t n, std::uint64_t r) {
  require_positive(n, "n");
  const std::uint64_t top = n + r + 1;
  return exact_divide(binomial(top, static_cast<std::int64_t>(r)) *
                          binomial(top, static_cast<std::int64_t>(n)),
                      top);
}

IdentityReport kreweras_report(std::uint64_t n, std::uint64_t r) {
  require_positive(n, "n");
  IdentityReport report;
  report.n = n;
  report.r = r;
  report.lhs = kreweras_lhs(n, r);
  const auto ri = static_cast<std::int64_t>(r);
  const auto two_n = static_cast<std::int64_t>(2 * n);
  for (std::int64_t s = 0; s <= ri; ++s) {
    BigCount term = exact_divide(binomial(n, ri - s) * binomial(n, ri - s + 1), n);
    if (term != 0) {
      term *= binomial(2 * n + static_cast<std::uint64_t>(s), two_n);
    }
    report.rhs += term;
    report.per_s_terms.emplace_back(s, std::move(term));
  }
  report.equal = report.lhs == report.rhs;
  return report;
}

BigCount kreweras_rhs(std::uint64_t n, std::uint64_t r) {
  return kreweras_report(n, r).rhs;
}

BigCount star_lhs(std::uint64_t n, std::uint64_t r) {
  require_positive(n, "n");
  require_positive(r, "r");
  return narayana(n + r, static_cast<std::int64_t>(r));
}

BigCount refined_count(std::uint64_t n, std::uint64_t r, std::int64_t s) {
  require_positive(n, "n");
  require_positive(r, "r");
  const auto ri = static_cast<std::int64_t>(r);
  if (s <= 0 || s > ri || static_cast<std::uint64_t>(s) > n) {
    return 0;
  }
  return narayana(n, s) * binomial(2 * n + r - static_cast<std::uint64_t>(s),
                                   ri - s);
}

IdentityReport star_rhs(std::uint64_t n, std::uint64_t r) {
  IdentityReport report;
  report.n = n;
  report.r = r;
  report.lhs = star_lhs(n, r);
  for (std::int64_t s = 1; s <= static_cast<std::int64_t>(r); ++s) {
    BigCount term = refined_count(n, r, s);
    report.rhs += term;
    report.per_s_terms.emplace_back(s, std::move(term));
  }
  report.equal = report.lhs == report.rhs;
  return report;
}

}  // namespace kreweras
