#include "cgraph/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "cgraph/core.hpp"

namespace cgraph {

bool GradedLexLess::operator()(const std::vector<int>& a, const std::vector<int>& b) const {
    int da = std::accumulate(a.begin(), a.end(), 0);
    int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da < db;
    return a < b;
}

std::string CycleIndex::str() const {
    std::ostringstream out;
    for (const auto& [type, coeff] : terms) {
        out << coeff.numerator() << "/" << coeff.denominator();
        for (int len : type) out << " " << len;
        out << "\n";
    }
    return out.str();
}

BigInt CountingSeries::coefficient(const std::vector<int>& exponents) const {
    auto it = terms.find(exponents);
    return it == terms.end() ? BigInt(0) : it->second;
}

BigInt CountingSeries::total() const {
    BigInt sum = 0;
    for (const auto& [e, c] : terms) sum += c;
    return sum;
}

std::string CountingSeries::str() const {
    std::ostringstream out;
    for (const auto& [exponents, coeff] : terms) {
        out << coeff;
        for (int e : exponents) out << " " << e;
        out << "\n";
    }
    return out.str();
}

namespace {

void check_n(int n, int limit) {
    if (n < 2) throw InvalidArgs("need n >= 2");
    if (n > limit)
        throw TooLarge("n = " + std::to_string(n) + " exceeds the limit " + std::to_string(limit));
}

// Cycle type (ascending lengths) of the permutation on unordered pairs
// induced by the vertex permutation sigma.
std::vector<int> induced_pair_cycle_type(const std::vector<int>& sigma, int n) {
    int q = pair_count(n);
    std::vector<int> image(q);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            int a = sigma[u], b = sigma[v];
            if (a > b) std::swap(a, b);
            image[pair_index(u, v, n)] = pair_index(a, b, n);
        }
    }
    std::vector<int> type;
    std::vector<bool> seen(q, false);
    for (int start = 0; start < q; ++start) {
        if (seen[start]) continue;
        int len = 0;
        for (int i = start; !seen[i]; i = image[i]) {
            seen[i] = true;
            ++len;
        }
        type.push_back(len);
    }
    std::sort(type.begin(), type.end());
    return type;
}

BigInt factorial(int n) {
    BigInt f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

using Poly = std::map<std::vector<int>, BigInt, GradedLexLess>;

Poly poly_mul(const Poly& a, const Poly& b, int variables) {
    Poly out;
    for (const auto& [ea, ca] : a) {
        for (const auto& [eb, cb] : b) {
            std::vector<int> e(variables);
            for (int i = 0; i < variables; ++i) e[i] = ea[i] + eb[i];
            out[std::move(e)] += ca * cb;
        }
    }
    return out;
}

// 1 + x_1^k + ... + x_{p-1}^k: the figure series with every variable raised
// to the k-th power.
Poly figure_power(int variables, int k) {
    Poly out;
    out[std::vector<int>(variables, 0)] = 1;
    for (int j = 0; j < variables; ++j) {
        std::vector<int> e(variables, 0);
        e[j] = k;
        out[std::move(e)] = 1;
    }
    return out;
}

}  // namespace

CycleIndex pair_group_cycle_index(int n, int limit) {
    check_n(n, limit);
    std::map<std::vector<int>, long long> tally;
    std::vector<int> sigma(n);
    std::iota(sigma.begin(), sigma.end(), 0);
    long long order = 0;
    do {
        ++tally[induced_pair_cycle_type(sigma, n)];
        ++order;
    } while (std::next_permutation(sigma.begin(), sigma.end()));

    CycleIndex z;
    z.n = n;
    z.q = pair_count(n);
    for (const auto& [type, count] : tally)
        z.terms[type] = BigRational(BigInt(count), BigInt(order));
    return z;
}

CountingSeries figure_series(Modulus mod) {
    CountingSeries s;
    s.variables = mod.value() - 1;
    for (const auto& [e, c] : figure_power(s.variables, 1)) s.terms[e] = c;
    return s;
}

CountingSeries configuration_series(int n, Modulus mod, int limit) {
    CycleIndex z = pair_group_cycle_index(n, limit);
    int variables = mod.value() - 1;

    // Sum of coeff * prod_{cycle length l in the type} (1 + sum_j x_j^l).
    // All coefficients share the denominator n!, so accumulate numerators
    // over that common denominator and divide at the end, checking that
    // every coefficient is integral.
    BigInt denom = factorial(n);
    Poly sum;
    for (const auto& [type, coeff] : z.terms) {
        Poly product;
        product[std::vector<int>(variables, 0)] = 1;
        for (int len : type) product = poly_mul(product, figure_power(variables, len), variables);
        BigInt scale = coeff.numerator() * (denom / coeff.denominator());
        for (const auto& [e, c] : product) sum[e] += scale * c;
    }

    CountingSeries out;
    out.variables = variables;
    for (const auto& [e, c] : sum) {
        if (c % denom != 0) throw Error("configuration series coefficient is not integral");
        BigInt v = c / denom;
        if (v != 0) out.terms[e] = v;
    }
    return out;
}

BigInt count_unlabeled(int n, Modulus mod, int limit) {
    CycleIndex z = pair_group_cycle_index(n, limit);
    BigInt denom = factorial(n);
    BigInt sum = 0;
    for (const auto& [type, coeff] : z.terms) {
        BigInt fixed = 1;
        for (std::size_t i = 0; i < type.size(); ++i) fixed *= mod.value();
        sum += coeff.numerator() * (denom / coeff.denominator()) * fixed;
    }
    if (sum % denom != 0) throw Error("unlabeled count is not integral");
    return sum / denom;
}

BigInt burnside_oracle(int n, Modulus mod, const BigInt& budget) {
    if (n < 2) throw InvalidArgs("need n >= 2");
    int q = pair_count(n);
    BigInt labeled = 1;
    for (int i = 0; i < q; ++i) labeled *= mod.value();
    BigInt fact = factorial(n);
    if (labeled * fact > budget)
        throw BudgetExceeded("p^q * n! exceeds the oracle budget");

    // Direct orbit count: for each vertex permutation, count the colorings
    // fixed by its action on pairs, i.e. p^(number of pair cycles). Walks
    // the pair array per permutation on its own, independent of the
    // cycle-index route.
    BigInt total = 0;
    std::vector<int> sigma(n);
    std::iota(sigma.begin(), sigma.end(), 0);
    std::vector<int> pair_image(q);
    std::vector<bool> visited(q);
    do {
        for (int u = 0; u < n; ++u) {
            for (int v = u + 1; v < n; ++v) {
                int a = std::min(sigma[u], sigma[v]);
                int b = std::max(sigma[u], sigma[v]);
                pair_image[pair_index(u, v, n)] = pair_index(a, b, n);
            }
        }
        std::fill(visited.begin(), visited.end(), false);
        int cycles = 0;
        for (int s = 0; s < q; ++s) {
            if (visited[s]) continue;
            ++cycles;
            for (int i = s; !visited[i]; i = pair_image[i]) visited[i] = true;
        }
        BigInt fixed = 1;
        for (int i = 0; i < cycles; ++i) fixed *= mod.value();
        total += fixed;
    } while (std::next_permutation(sigma.begin(), sigma.end()));

    if (total % fact != 0) throw Error("Burnside sum is not divisible by n!");
    return total / fact;
}

}  // namespace cgraph
