#include "cgraph/enumerate.hpp"

#include <set>
#include <vector>

#include "cgraph/iso.hpp"
#include "doctest.h"

using namespace cgraph;

namespace {

const Modulus m2(2);
const Modulus m3(3);

BigRational frac(long long num, long long den) { return BigRational(BigInt(num), BigInt(den)); }

// Count cisomorphism classes the hard way: canonicalize every labeled cgraph.
BigInt census(int n, Modulus mod) {
    std::set<CanonicalCode> codes;
    for_each_labeled(n, mod, [&](const CGraph& g) { codes.insert(canonical_code(g)); });
    return BigInt(codes.size());
}

}  // namespace

TEST_CASE("cycle index of the pair group on 3 vertices") {
    CycleIndex z = pair_group_cycle_index(3);
    CHECK(z.n == 3);
    CHECK(z.q == 3);
    REQUIRE(z.terms.size() == 3);
    CHECK(z.terms.at({1, 1, 1}) == frac(1, 6));
    CHECK(z.terms.at({1, 2}) == frac(1, 2));
    CHECK(z.terms.at({3}) == frac(1, 3));
    CHECK(z.str() == "1/6 1 1 1\n1/2 1 2\n1/3 3\n");
}

TEST_CASE("cycle index of the pair group on 4 vertices") {
    CycleIndex z = pair_group_cycle_index(4);
    CHECK(z.q == 6);
    REQUIRE(z.terms.size() == 4);
    CHECK(z.terms.at({1, 1, 1, 1, 1, 1}) == frac(1, 24));
    CHECK(z.terms.at({1, 1, 2, 2}) == frac(3, 8));
    CHECK(z.terms.at({2, 4}) == frac(1, 4));
    CHECK(z.terms.at({3, 3}) == frac(1, 3));
}

TEST_CASE("cycle index coefficients are a probability distribution") {
    for (int n = 2; n <= 7; ++n) {
        CycleIndex z = pair_group_cycle_index(n);
        BigRational sum(0);
        for (const auto& [type, coeff] : z.terms) {
            CHECK(coeff > BigRational(0));
            int total = 0;
            for (int len : type) total += len;
            CHECK(total == z.q);
            sum += coeff;
        }
        CHECK(sum == BigRational(1));
    }
}

TEST_CASE("figure series") {
    CountingSeries f = figure_series(m3);
    CHECK(f.variables == 2);
    CHECK(f.total() == 3);
    CHECK(f.str() == "1 0 0\n1 0 1\n1 1 0\n");
    CHECK(figure_series(m2).str() == "1 0\n1 1\n");
}

TEST_CASE("configuration series for 3 vertices over GF(3)") {
    CountingSeries s = configuration_series(3, m3);
    CHECK(s.total() == 10);
    // ten classes, one per color profile
    CHECK(s.str() ==
          "1 0 0\n"
          "1 0 1\n"
          "1 1 0\n"
          "1 0 2\n"
          "1 1 1\n"
          "1 2 0\n"
          "1 0 3\n"
          "1 1 2\n"
          "1 2 1\n"
          "1 3 0\n");
    CHECK(s.coefficient({1, 1}) == 1);
    CHECK(s.coefficient({4, 0}) == 0);
}

TEST_CASE("configuration series for 4 vertices over GF(2) counts graphs by edges") {
    CountingSeries s = configuration_series(4, m2);
    std::vector<int> expected = {1, 1, 2, 3, 2, 1, 1};
    for (int e = 0; e <= 6; ++e) CHECK(s.coefficient({e}) == expected[e]);
    CHECK(s.total() == 11);
}

TEST_CASE("series coefficients match an exhaustive census by color profile") {
    std::map<std::vector<int>, std::set<CanonicalCode>> by_profile;
    for_each_labeled(4, m3, [&](const CGraph& g) {
        std::vector<int> profile(2, 0);
        for (const auto& e : g.edges()) ++profile[e.color - 1];
        by_profile[profile].insert(canonical_code(g));
    });
    CountingSeries s = configuration_series(4, m3);
    BigInt total = 0;
    for (const auto& [profile, codes] : by_profile) {
        CHECK(s.coefficient(profile) == BigInt(codes.size()));
        total += BigInt(codes.size());
    }
    CHECK(s.total() == total);
}

TEST_CASE("unlabeled counts at known points") {
    CHECK(count_unlabeled(3, m3) == 10);
    CHECK(count_unlabeled(4, m3) == 66);
    CHECK(count_unlabeled(4, m2) == 11);
    CHECK(count_unlabeled(5, m2) == 34);
    CHECK(count_unlabeled(4, Modulus(5)) == 900);
}

TEST_CASE("series, count, oracle, and census all agree") {
    for (int n = 2; n <= 5; ++n) {
        for (int p : {2, 3}) {
            Modulus mod(p);
            BigInt count = count_unlabeled(n, mod);
            CHECK(count == configuration_series(n, mod).total());
            CHECK(count == burnside_oracle(n, mod));
            long long space = 1;
            for (int i = 0; i < pair_count(n); ++i) space *= p;
            if (space <= 2048) CHECK(count == census(n, mod));
        }
    }
    CHECK(count_unlabeled(4, Modulus(5)) == burnside_oracle(4, Modulus(5)));
}

TEST_CASE("enumeration guards") {
    CHECK_THROWS_AS(pair_group_cycle_index(1), InvalidArgs);
    CHECK_THROWS_AS(count_unlabeled(1, m3), InvalidArgs);
    CHECK_THROWS_AS(burnside_oracle(1, m3), InvalidArgs);
    CHECK_THROWS_AS(pair_group_cycle_index(11), TooLarge);
    CHECK_THROWS_AS(configuration_series(11, m3), TooLarge);
    CHECK_THROWS_AS(count_unlabeled(11, m3), TooLarge);
    // the limit parameter moves the ceiling in both directions
    CHECK_THROWS_AS(pair_group_cycle_index(5, 4), TooLarge);
    CHECK(count_unlabeled(5, m3, 5) == count_unlabeled(5, m3));
    CHECK_THROWS_AS(burnside_oracle(5, m3, BigInt(10)), BudgetExceeded);
}
