#include "kreweras/combinatorics.hpp"

#include <thread>
#include <vector>

#include "gtest/gtest.h"
#include "kreweras/error.hpp"
#include "oracle.hpp"

namespace kreweras {
namespace {

// Reference values computed independently with Python's math.comb.
const BigCount kCatalan200(
    "51220149321101707946754169313632829232443246458247586186492069440757876802"
    "3144072628540276213813397768975366156750120");
const BigCount kNarayana400_200(
    "26366212149583355322481759439713801981343296946891746342018279188360585192"
    "11571232502766653216485111171359916099458874980144881770182180574618695345"
    "82780660457096000738503029192214347186766889595024058884391575776313808756"
    "73232061447200");
const BigCount kKrewerasLhs100_100(
    "16155335112162892783310384052044217120297804520512045852232703359876877116"
    "8096988307256489332521755596055766235342400");
const BigCount kBinomial600_200(
    "25060177832214028050056167705132288352025510250879338947309434333244139831"
    "55288468780260901828661482746214771260879908644862832606221283401387694430"
    "55475567389095596");

TEST(Binomial, Examples) {
  EXPECT_EQ(binomial(5, 0), 1);
  EXPECT_EQ(binomial(5, 1), 5);
  EXPECT_EQ(binomial(4, 2), 6);
  EXPECT_EQ(binomial(3, -1), 0);
  EXPECT_EQ(binomial(3, 4), 0);
  EXPECT_EQ(binomial(0, 0), 1);
}

TEST(Binomial, MatchesPascalOracle) {
  for (std::int64_t a = 0; a <= 60; ++a) {
    for (std::int64_t b = -2; b <= a + 2; ++b) {
      ASSERT_EQ(binomial(a, b), oracle::small_binomial(a, b)) << a << "," << b;
    }
  }
}

TEST(Binomial, LargeValues) {
  EXPECT_EQ(binomial(600, 200), kBinomial600_200);
  // Past the cached rows the multiplicative route is used.
  EXPECT_EQ(binomial(5000, 3), BigCount("20820835000"));
  EXPECT_EQ(binomial(kBinomialCacheRows + 4, 2),
            BigCount((kBinomialCacheRows + 4) * (kBinomialCacheRows + 3) / 2));
  EXPECT_EQ(binomial(4100, 2050) % BigCount("100000000000000000000"),
            BigCount("18236496358998072740"));
}

TEST(Binomial, ConcurrentCallsAgree) {
  std::vector<BigCount> results(8);
  std::vector<std::thread> threads;
  for (int t = 0; t < 8; ++t) {
    threads.emplace_back([&results, t] {
      BigCount acc = 0;
      for (std::uint64_t a = 0; a < 700; a += 7) acc += binomial(a, a / 3);
      results[t] = acc;
    });
  }
  for (auto& th : threads) th.join();
  for (const auto& r : results) EXPECT_EQ(r, results[0]);
}

TEST(Narayana, Examples) {
  EXPECT_EQ(narayana(1, 1), 1);
  EXPECT_EQ(narayana(3, 2), 3);
  EXPECT_EQ(narayana(4, 2), 6);
  EXPECT_EQ(narayana(0, 0), 1);
  EXPECT_EQ(narayana(0, 1), 0);
  EXPECT_EQ(narayana(4, 0), 0);
  EXPECT_EQ(narayana(4, 5), 0);
  EXPECT_EQ(narayana(4, -3), 0);
  EXPECT_EQ(narayana(400, 200), kNarayana400_200);
}

TEST(Narayana, MatchesBruteForcePeakCounts) {
  for (std::size_t m = 1; m <= 10; ++m) {
    std::vector<std::uint64_t> by_peaks(m + 1, 0);
    for (const auto& w : oracle::dyck_words(m)) ++by_peaks[oracle::count_peaks(w)];
    for (std::size_t k = 0; k <= m; ++k) {
      EXPECT_EQ(narayana(m, static_cast<std::int64_t>(k)), by_peaks[k]);
    }
  }
}

TEST(Narayana, ExactUpToFiveHundred) {
  // Any remainder would throw InexactDivision.
  for (std::uint64_t n = 1; n <= 500; ++n) {
    for (std::int64_t k = 1; k <= static_cast<std::int64_t>(n); ++k) {
      ASSERT_NO_THROW(narayana(n, k)) << n << "," << k;
    }
    ASSERT_NO_THROW(catalan(n));
    ASSERT_NO_THROW(kreweras_lhs(n, n));
  }
}

TEST(Catalan, Examples) {
  EXPECT_EQ(catalan(0), 1);
  EXPECT_EQ(catalan(3), 5);
  EXPECT_EQ(catalan(12), 208012);
  EXPECT_EQ(catalan(200), kCatalan200);
  for (std::size_t m = 0; m <= 10; ++m) {
    EXPECT_EQ(catalan(m), oracle::dyck_words(m).size());
  }
}

TEST(Catalan, NarayanaRowSums) {
  for (std::uint64_t n = 1; n <= 200; ++n) {
    BigCount sum = 0;
    for (std::int64_t k = 1; k <= static_cast<std::int64_t>(n); ++k) sum += narayana(n, k);
    ASSERT_EQ(sum, catalan(n)) << n;
  }
}

TEST(Kreweras, Examples) {
  EXPECT_EQ(kreweras_lhs(2, 1), 6);
  EXPECT_EQ(kreweras_lhs(1, 0), 1);
  EXPECT_EQ(kreweras_lhs(3, 2), narayana(6, 3));
  EXPECT_EQ(kreweras_lhs(100, 100), kKrewerasLhs100_100);

  EXPECT_EQ(kreweras_rhs(2, 1), 6);
  EXPECT_EQ(kreweras_rhs(1, 0), 1);
  EXPECT_EQ(kreweras_rhs(2, 2), kreweras_lhs(2, 2));

  const IdentityReport report = kreweras_report(2, 1);
  ASSERT_EQ(report.per_s_terms.size(), 2u);
  EXPECT_EQ(report.per_s_terms[0], (std::pair<std::int64_t, BigCount>{0, 1}));
  EXPECT_EQ(report.per_s_terms[1], (std::pair<std::int64_t, BigCount>{1, 5}));
  EXPECT_TRUE(report.equal);
}

TEST(Kreweras, RequiresPositiveN) {
  EXPECT_THROW(kreweras_lhs(0, 3), Error);
  EXPECT_THROW(kreweras_rhs(0, 3), Error);
  EXPECT_THROW(star_lhs(0, 1), Error);
  EXPECT_THROW(star_lhs(1, 0), Error);
  EXPECT_THROW(star_rhs(0, 1), Error);
  EXPECT_THROW(refined_count(0, 1, 1), Error);
}

TEST(Star, Examples) {
  EXPECT_EQ(star_lhs(2, 2), 6);
  EXPECT_EQ(star_lhs(1, 2), 3);
  EXPECT_EQ(star_lhs(1, 1), 1);

  using Terms = std::vector<std::pair<std::int64_t, BigCount>>;
  IdentityReport a = star_rhs(2, 2);
  EXPECT_EQ(a.per_s_terms, (Terms{{1, 5}, {2, 1}}));
  EXPECT_EQ(a.rhs, 6);
  EXPECT_EQ(a.lhs, 6);
  EXPECT_TRUE(a.equal);

  IdentityReport b = star_rhs(1, 2);
  EXPECT_EQ(b.per_s_terms, (Terms{{1, 3}, {2, 0}}));
  EXPECT_EQ(b.rhs, 3);
  EXPECT_TRUE(b.equal);

  IdentityReport c = star_rhs(1, 1);
  EXPECT_EQ(c.per_s_terms, (Terms{{1, 1}}));
  EXPECT_TRUE(c.equal);
}

TEST(Star, ReportInvariants) {
  for (std::uint64_t n = 1; n <= 30; ++n) {
    for (std::uint64_t r = 1; r <= 30; ++r) {
      const IdentityReport rep = star_rhs(n, r);
      BigCount sum = 0;
      for (const auto& [s, term] : rep.per_s_terms) sum += term;
      EXPECT_EQ(sum, rep.rhs);
      EXPECT_EQ(rep.equal, rep.lhs == rep.rhs);
      EXPECT_EQ(rep.per_s_terms.size(), r);
    }
  }
}

TEST(Star, ShiftRelation) {
  for (std::uint64_t n = 1; n <= 40; ++n) {
    for (std::uint64_t r = 1; r <= 40; ++r) {
      ASSERT_EQ(kreweras_lhs(n, r), star_lhs(n, r + 1));
      ASSERT_EQ(kreweras_rhs(n, r), star_rhs(n, r + 1).rhs);
    }
  }
}

TEST(RefinedCount, Examples) {
  EXPECT_EQ(refined_count(2, 2, 1), 5);
  EXPECT_EQ(refined_count(2, 2, 2), 1);
  EXPECT_EQ(refined_count(1, 2, 1), 3);
  EXPECT_EQ(refined_count(2, 2, 0), 0);
  EXPECT_EQ(refined_count(2, 2, 3), 0);
  EXPECT_EQ(refined_count(2, 5, 3), 0);  // s > n
  EXPECT_EQ(refined_count(2, 2, -1), 0);

  // Brute-force joint count at semilength 3, r = 2, s = 1.
  EXPECT_EQ(refined_count(1, 2, 1), oracle::joint_counts(3).at({2, 1}));
}

TEST(RefinedCount, SumsToStarLhs) {
  for (std::uint64_t n = 1; n <= 25; ++n) {
    for (std::uint64_t r = 1; r <= 25; ++r) {
      BigCount sum = 0;
      for (std::int64_t s = -1; s <= static_cast<std::int64_t>(r) + 1; ++s) {
        sum += refined_count(n, r, s);
      }
      EXPECT_EQ(sum, star_lhs(n, r));
    }
  }
}

TEST(RefinedCount, MatchesBruteForceJointCounts) {
  for (std::size_t m = 2; m <= 10; ++m) {
    const auto joint = oracle::joint_counts(m);
    for (std::size_t r = 1; r < m; ++r) {
      for (std::int64_t s = 1; s <= static_cast<std::int64_t>(r); ++s) {
        const auto it = joint.find({r, static_cast<std::size_t>(s)});
        const std::uint64_t expected = it == joint.end() ? 0 : it->second;
        EXPECT_EQ(refined_count(m - r, r, s), expected) << m << "," << r << "," << s;
      }
    }
  }
}

TEST(ExactDivide, ThrowsOnRemainder) {
  EXPECT_EQ(exact_divide(12, 4), 3);
  try {
    exact_divide(13, 4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InexactDivision);
  }
  EXPECT_THROW(exact_divide(1, 0), Error);
}

}  // namespace
}  // namespace kreweras
