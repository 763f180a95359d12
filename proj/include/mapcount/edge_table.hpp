#pragma once

#include <utility>
#include <vector>

#include "mapcount/integer.hpp"

namespace mapcount {

/**
 * Table of rooted map counts m_g(n) on the orientable surface of genus g
 * with n edges, for 0 <= g <= max_genus and 0 <= n <= max_edges.
 *
 * Storage is jagged: for each edge count n only the genera 0..floor(n/2)
 * are stored, since a genus-g map needs at least 2g edges. Lookups inside
 * the declared bounds but outside that support read as 0.
 */
class EdgeTable {
public:
    int max_genus() const { return max_genus_; }
    int max_edges() const { return max_edges_; }

    // m_g(n). Throws std::out_of_range outside the declared bounds.
    const Int& lookup(int genus, int edges) const {
        check_bounds(genus, edges);
        if (genus > edges / 2) return zero_;
        return rows_[edges][genus];
    }

    // (2n+1) * m_g(n), kept alongside the plain values so convolutions
    // need a single big multiplication per term.
    const Int& scaled(int genus, int edges) const {
        check_bounds(genus, edges);
        if (genus > edges / 2) return zero_;
        return scaled_[edges][genus];
    }

    std::size_t entry_count() const {
        std::size_t c = 0;
        for (const auto& row : rows_) c += row.size();
        return c;
    }

    bool operator==(const EdgeTable& other) const {
        return max_genus_ == other.max_genus_ && max_edges_ == other.max_edges_ &&
               rows_ == other.rows_;
    }

private:
    EdgeTable(int max_genus, int max_edges)
        : max_genus_(max_genus), max_edges_(max_edges) {}

    void check_bounds(int genus, int edges) const {
        if (genus < 0 || genus > max_genus_ || edges < 0 || edges > max_edges_)
            throw std::out_of_range("EdgeTable::lookup(" + std::to_string(genus) +
                                    ", " + std::to_string(edges) + ") outside table built for g <= " +
                                    std::to_string(max_genus_) + ", n <= " + std::to_string(max_edges_));
    }

    int max_genus_;
    int max_edges_;
    std::vector<std::vector<Int>> rows_;    // rows_[n][g]
    std::vector<std::vector<Int>> scaled_;  // scaled_[n][g] = (2n+1) m_g(n)
    Int zero_;

    friend EdgeTable build_edge_table(int, int);
};

/**
 * Builds the full table from the genus recurrence of Carrell and Chapuy:
 *
 *   (n+1) m_g(n) = (8n-4) m_g(n-1)
 *                + (2n-3)(n-1)(2n-1) m_{g-1}(n-2)
 *                + 3 * sum_{i+j=g} sum_{k+l=n-2, k>=2i, l>=2j}
 *                      (2k+1)(2l+1) m_i(k) m_j(l)
 *
 * with m_0(0) = 1 and m_g(n) = 0 for g < 0 or n < 2g. The assembled
 * right-hand side is divisible by n+1 for every entry; the division is
 * checked exactly and any failure aborts the build.
 */
inline EdgeTable build_edge_table(int max_genus, int max_edges) {
    if (max_genus < 0 || max_edges < 0)
        throw std::invalid_argument("build_edge_table: negative bounds");

    EdgeTable t(max_genus, max_edges);
    t.rows_.resize(max_edges + 1);
    t.scaled_.resize(max_edges + 1);

    Int acc, conv;
    for (int n = 0; n <= max_edges; ++n) {
        const int top_genus = std::min(max_genus, n / 2);
        t.rows_[n].resize(top_genus + 1);
        t.scaled_[n].resize(top_genus + 1);
        for (int g = 0; g <= top_genus; ++g) {
            if (n == 0) {
                t.rows_[0][0] = 1;
            } else {
                acc = (8 * n - 4) * t.lookup(g, n - 1);
                if (g >= 1 && n >= 2) {
                    acc += Int(2 * n - 3) * Int(n - 1) * Int(2 * n - 1) *
                           t.lookup(g - 1, n - 2);
                }
                conv = 0;
                for (int i = 0; i <= g; ++i) {
                    const int j = g - i;
                    for (int k = 2 * i; k <= n - 2 - 2 * j; ++k) {
                        // conv += (2k+1) m_i(k) * (2l+1) m_j(l), l = n-2-k
                        conv += t.scaled_[k][i] * t.scaled_[n - 2 - k][j];
                    }
                }
                acc += 3 * conv;
                t.rows_[n][g] = exact_quotient(acc, n + 1, "edge recurrence");
            }
            t.scaled_[n][g] = (2 * n + 1) * t.rows_[n][g];
        }
    }
    return t;
}

}  // namespace mapcount
