#pragma once

#include <numeric>
#include <vector>

#include "mapcount/integer.hpp"

namespace mapcount {

/**
 * Signature (gamma; m_1..m_r) of the quotient of a genus-g surface by a
 * cyclic group of orientation-preserving homeomorphisms: quotient genus
 * gamma plus the multiset of branch orders, each dividing the period.
 * Riemann-Hurwitz ties it to the covered genus g and the period l:
 *
 *   2 - 2g = l * (2 - 2*gamma - sum_j (1 - 1/m_j)).
 */
struct OrbifoldSignature {
    int quotient_genus = 0;
    std::vector<int> branch_orders;  // ascending, each >= 2 and dividing the period

    bool operator==(const OrbifoldSignature& other) const = default;
};

/**
 * All signatures admissible for (g, period), period >= 2. Ordered by
 * quotient genus ascending, then branch multiset lexicographically.
 * The list may be empty (no order-`period` symmetry exists on genus g).
 */
inline std::vector<OrbifoldSignature> enumerate_signatures(int g, int period) {
    if (g < 0 || period < 2)
        throw std::invalid_argument("enumerate_signatures: need g >= 0 and period >= 2");

    std::vector<long> orders;  // candidate branch orders, ascending
    for (long d : divisors(period))
        if (d >= 2) orders.push_back(d);

    std::vector<OrbifoldSignature> result;
    std::vector<int> chosen;
    // Scaled Riemann-Hurwitz: sum_j (period - period/m_j) must equal
    // period*(2-2*gamma) - (2-2g); each branch order m contributes
    // period - period/m. DFS over nondecreasing order choices emits the
    // multisets in lexicographic order.
    auto dfs = [&](auto&& self, long remaining, std::size_t first, int gamma) -> void {
        if (remaining == 0) {
            result.push_back({gamma, {chosen.begin(), chosen.end()}});
            return;
        }
        for (std::size_t idx = first; idx < orders.size(); ++idx) {
            const long weight = period - period / orders[idx];
            if (weight > remaining) continue;
            chosen.push_back(static_cast<int>(orders[idx]));
            self(self, remaining - weight, idx, gamma);
            chosen.pop_back();
        }
    };

    for (int gamma = 0; gamma <= g; ++gamma) {
        const long target = static_cast<long>(period) * (2 - 2 * gamma) - (2 - 2 * g);
        if (target < 0) break;  // decreases with gamma
        dfs(dfs, target, 0, gamma);
    }
    return result;
}

namespace detail {

// Number of r-tuples of elements of Z_d with exact orders (m_1..m_r)
// summing to 0 mod d. Plain convolution over residues; everything exact.
inline Int zero_sum_tuples(long d, const std::vector<int>& orders) {
    std::vector<Int> counts(d, Int(0)), next(d);
    counts[0] = 1;
    for (int m : orders) {
        if (d % m != 0) return 0;
        for (auto& x : next) x = 0;
        const long base = d / m;
        for (long u = 1; u <= m; ++u) {
            if (std::gcd(u, static_cast<long>(m)) != 1) continue;
            const long x = base * u % d;
            for (long res = 0; res < d; ++res) {
                if (counts[res] != 0) next[(res + x) % d] += counts[res];
            }
        }
        counts.swap(next);
    }
    return counts[0];
}

}  // namespace detail

/**
 * Number of order-preserving epimorphisms from the orbifold fundamental
 * group onto Z_period: tuples of images for the 2*gamma handle generators
 * (free) and the branch generators (order exactly m_j, sum of branch
 * images 0 in the abelian target) that together generate the whole group.
 * Surjectivity is sifted out over the subgroup lattice by Moebius
 * inversion.
 */
inline Int count_epimorphisms(const OrbifoldSignature& sig, int period) {
    if (period < 2)
        throw std::invalid_argument("count_epimorphisms: period must be >= 2");
    long need = 1;
    for (int m : sig.branch_orders) need = std::lcm(need, static_cast<long>(m));

    Int total = 0;
    for (long d : divisors(period)) {
        if (d % need != 0) continue;
        const int mu = moebius(period / d);
        if (mu == 0) continue;
        Int sub = detail::zero_sum_tuples(d, sig.branch_orders);
        if (sub == 0) continue;
        Int handles;
        mpz_ui_pow_ui(handles.get_mpz_t(), static_cast<unsigned long>(d),
                      static_cast<unsigned long>(2 * sig.quotient_genus));
        sub *= handles;
        if (mu > 0)
            total += sub;
        else
            total -= sub;
    }
    return total;
}

// Exact Riemann-Hurwitz check, scaled by the lcm of the branch orders so
// everything stays integral.
inline bool satisfies_riemann_hurwitz(const OrbifoldSignature& sig, int g, int period) {
    long long scale = 1;
    for (int m : sig.branch_orders) scale = std::lcm(scale, static_cast<long long>(m));
    long long branch = 0;
    for (int m : sig.branch_orders) branch += scale - scale / m;
    const long long lhs = (2 - 2 * static_cast<long long>(g)) * scale;
    const long long rhs = static_cast<long long>(period) *
                          ((2 - 2 * static_cast<long long>(sig.quotient_genus)) * scale - branch);
    return lhs == rhs;
}

}  // namespace mapcount
