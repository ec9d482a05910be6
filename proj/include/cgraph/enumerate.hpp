#ifndef CGRAPH_ENUMERATE_HPP
#define CGRAPH_ENUMERATE_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>
#include <map>
#include <string>
#include <vector>

#include "cgraph/field.hpp"

namespace cgraph {

// Counting results must be bit-exact, so everything here is arbitrary
// precision: integers for series coefficients, rationals for cycle-index
// coefficients. No floating point anywhere.
using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::rational<BigInt>;

// Ascending total degree, ties by ascending lexicographic exponent vector.
struct GradedLexLess {
    bool operator()(const std::vector<int>& a, const std::vector<int>& b) const;
};

// The cycle index Z(R_n) of the pair group R_n: the permutation group on
// the q = n(n-1)/2 unordered vertex pairs induced by S_n. A term maps a
// cycle type (cycle lengths ascending, summing to q) to its rational
// coefficient; coefficients are positive and sum to exactly 1.
struct CycleIndex {
    int n = 0;
    int q = 0;
    std::map<std::vector<int>, BigRational> terms;

    // One line per term: "<num>/<den> <l1> <l2> ...", cycle lengths
    // ascending, terms in ascending lexicographic order of type.
    std::string str() const;

    friend bool operator==(const CycleIndex&, const CycleIndex&) = default;
};

// An integer-coefficient polynomial in the p-1 color variables x_1..x_{p-1}.
// The coefficient of x_1^{e_1}...x_{p-1}^{e_{p-1}} counts the cisomorphism
// classes with exactly e_j edges of color j.
struct CountingSeries {
    int variables = 0;
    std::map<std::vector<int>, BigInt, GradedLexLess> terms;

    BigInt coefficient(const std::vector<int>& exponents) const;
    BigInt total() const;  // value at all variables = 1

    // One line per term in graded-lex order: "<coeff> <e1> <e2> ...".
    std::string str() const;

    friend bool operator==(const CountingSeries&, const CountingSeries&) = default;
};

// Computed by explicit induction over all n! vertex permutations.
CycleIndex pair_group_cycle_index(int n, int limit = 10);

// The per-edge color generating function 1 + x_1 + ... + x_{p-1}
// (the constant term is white = absence).
CountingSeries figure_series(Modulus mod);

// Z(R_n) with t_k := 1 + x_1^k + ... + x_{p-1}^k. All coefficients come
// out integral.
CountingSeries configuration_series(int n, Modulus mod, int limit = 10);

// Number of unlabeled cgraphs on n vertices over GF(p): Z(R_n) at t_k := p.
BigInt count_unlabeled(int n, Modulus mod, int limit = 10);

// Independent Burnside check: orbits of the p^q colorings under the pair
// action, computed as (1/n!) * sum over sigma of p^(cycles of the induced
// pair permutation). Deliberately shares no code with the cycle-index path.
BigInt burnside_oracle(int n, Modulus mod, const BigInt& budget = BigInt("10000000000000000000"));

}  // namespace cgraph

#endif
