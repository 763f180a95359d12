#pragma once

#include <algorithm>
#include <thread>
#include <utility>
#include <vector>

#include "mapcount/integer.hpp"

namespace mapcount {

enum class Axis { faces, vertices };

/**
 * Table of rooted map counts m_g(n,f) by genus g, edge count n and face
 * count f, built from the bivariate recurrence of Carrell and Chapuy:
 *
 *   (n+1) m_g(n,f) = (4n-2) (m_g(n-1,f) + m_g(n-1,f-1))
 *                  + (2n-3)(n-1)(2n-1) m_{g-1}(n-2,f)
 *                  + 3 * sum_{i+j=g} sum_{k+l=n-2, k>=2i, l>=2j}
 *                        sum_{u+v=f, u,v>=1} (2k+1)(2l+1) m_i(k,u) m_j(l,v)
 *
 * with m_0(0,1) = 1 and m_g(n,f) = 0 if g < 0, n < 2g, f < 1 or
 * n-f+2(1-g) < 1. Rows are stored for f = 1..n+1-2g only; anything else
 * inside the declared bounds reads as 0.
 *
 * Face-vertex duality makes m_g(n,f) also the number of rooted maps with
 * f vertices, so the third index can be reinterpreted as a vertex count
 * without touching the entries; the axis tag records which reading is
 * current.
 */
class EdgeVertexTable {
public:
    int max_genus() const { return max_genus_; }
    int max_edges() const { return max_edges_; }
    Axis axis() const { return axis_; }

    // m_g(n,x) where x counts faces or vertices depending on axis().
    // Throws std::out_of_range when (genus, edges) lies outside the
    // declared bounds; x outside 1..n+1-2g reads as 0.
    const Int& lookup(int genus, int edges, int x) const {
        check_bounds(genus, edges);
        if (genus > edges / 2) return zero_;
        const auto& row = rows_[edges][genus];
        if (x < 1 || x > static_cast<int>(row.size())) return zero_;
        return row[x - 1];
    }

    // Full row m_g(n, 1..n+1-2g); empty when n < 2g.
    const std::vector<Int>& row(int genus, int edges) const {
        check_bounds(genus, edges);
        if (genus > edges / 2) return empty_row_;
        return rows_[edges][genus];
    }

    // Row sum, i.e. the univariate count m_g(n).
    Int row_sum(int genus, int edges) const {
        Int s = 0;
        for (const Int& c : row(genus, edges)) s += c;
        return s;
    }

    std::size_t entry_count() const {
        std::size_t c = 0;
        for (const auto& layer : rows_)
            for (const auto& row : layer) c += row.size();
        return c;
    }

    bool operator==(const EdgeVertexTable& other) const {
        return max_genus_ == other.max_genus_ && max_edges_ == other.max_edges_ &&
               axis_ == other.axis_ && rows_ == other.rows_;
    }

private:
    EdgeVertexTable(int max_genus, int max_edges)
        : max_genus_(max_genus), max_edges_(max_edges) {}

    void check_bounds(int genus, int edges) const {
        if (genus < 0 || genus > max_genus_ || edges < 0 || edges > max_edges_)
            throw std::out_of_range("EdgeVertexTable::lookup(" + std::to_string(genus) +
                                    ", " + std::to_string(edges) + ") outside table built for g <= " +
                                    std::to_string(max_genus_) + ", n <= " + std::to_string(max_edges_));
    }

    void build_row(int n, int g, std::vector<Int>& acc, std::vector<Int>& conv);

    int max_genus_;
    int max_edges_;
    Axis axis_ = Axis::faces;
    // rows_[n][g] holds m_g(n, 1..n+1-2g); scaled_ holds (2n+1) times it.
    std::vector<std::vector<std::vector<Int>>> rows_;
    std::vector<std::vector<std::vector<Int>>> scaled_;
    Int zero_;
    std::vector<Int> empty_row_;

    friend EdgeVertexTable build_edge_vertex_table(int, int, int);
    friend EdgeVertexTable reinterpret_as_vertices(EdgeVertexTable);
};

inline void EdgeVertexTable::build_row(int n, int g, std::vector<Int>& acc,
                                       std::vector<Int>& conv) {
    const int fmax = n + 1 - 2 * g;
    auto& out = rows_[n][g];
    auto& out_scaled = scaled_[n][g];
    out.resize(fmax);
    out_scaled.resize(fmax);

    acc.assign(fmax, Int(0));
    const Int c_prev(4 * n - 2);
    const auto& prev_layer = rows_[n - 1];
    if (g < static_cast<int>(prev_layer.size())) {
        const auto& prev = prev_layer[g];  // m_g(n-1, *), f = 1..n-2g
        const int plen = static_cast<int>(prev.size());
        for (int f = 1; f <= fmax; ++f) {
            if (f <= plen) acc[f - 1] += c_prev * prev[f - 1];
            if (f - 1 >= 1 && f - 1 <= plen) acc[f - 1] += c_prev * prev[f - 2];
        }
    }
    if (g >= 1 && n >= 2) {
        const Int c_handle = Int(2 * n - 3) * Int(n - 1) * Int(2 * n - 1);
        const auto& handle_layer = rows_[n - 2];
        if (g - 1 < static_cast<int>(handle_layer.size())) {
            const auto& below = handle_layer[g - 1];  // m_{g-1}(n-2, *)
            const int blen = std::min<int>(below.size(), fmax);
            for (int f = 1; f <= blen; ++f) acc[f - 1] += c_handle * below[f - 1];
        }
    }

    conv.assign(fmax, Int(0));
    for (int i = 0; i <= g; ++i) {
        const int j = g - i;
        for (int k = 2 * i; k <= n - 2 - 2 * j; ++k) {
            const int l = n - 2 - k;
            const auto& a = scaled_[k][i];  // (2k+1) m_i(k, u), u = 1..k+1-2i
            const auto& b = scaled_[l][j];
            const int alen = static_cast<int>(a.size());
            const int blen = static_cast<int>(b.size());
            for (int u = 1; u <= alen; ++u) {
                const Int& au = a[u - 1];
                Int* dest = conv.data() + u;  // slot for f = u+1
                for (int v = 1; v <= blen; ++v, ++dest) *dest += au * b[v - 1];
            }
        }
    }

    const Int three(3);
    for (int f = 1; f <= fmax; ++f) {
        acc[f - 1] += three * conv[f - 1];
        out[f - 1] = exact_quotient(acc[f - 1], n + 1, "edge-face recurrence");
        out_scaled[f - 1] = (2 * n + 1) * out[f - 1];
    }
}

/**
 * Builds the bivariate table layer by layer in n. Within a layer every
 * genus row depends only on layers with strictly smaller n, so rows of one
 * layer may be computed concurrently; `threads` <= 1 selects the
 * single-threaded reference path. Both paths accumulate each row in the
 * same fixed order (ascending i, then k, then u), so the result is
 * identical bit for bit.
 */
inline EdgeVertexTable build_edge_vertex_table(int max_genus, int max_edges,
                                               int threads = 1) {
    if (max_genus < 0 || max_edges < 0)
        throw std::invalid_argument("build_edge_vertex_table: negative bounds");

    EdgeVertexTable t(max_genus, max_edges);
    t.rows_.resize(max_edges + 1);
    t.scaled_.resize(max_edges + 1);

    std::vector<Int> acc, conv;
    for (int n = 0; n <= max_edges; ++n) {
        const int top_genus = std::min(max_genus, n / 2);
        t.rows_[n].resize(top_genus + 1);
        t.scaled_[n].resize(top_genus + 1);
        if (n == 0) {
            t.rows_[0][0] = {Int(1)};
            t.scaled_[0][0] = {Int(1)};
            continue;
        }
        if (threads <= 1 || top_genus == 0) {
            for (int g = 0; g <= top_genus; ++g) t.build_row(n, g, acc, conv);
        } else {
            const int nworkers = std::min(threads, top_genus + 1);
            std::vector<std::thread> pool;
            pool.reserve(nworkers);
            for (int w = 0; w < nworkers; ++w) {
                pool.emplace_back([&t, n, top_genus, w, nworkers] {
                    std::vector<Int> acc_w, conv_w;
                    for (int g = w; g <= top_genus; g += nworkers)
                        t.build_row(n, g, acc_w, conv_w);
                });
            }
            for (auto& th : pool) th.join();
        }
    }
    return t;
}

// Relabels the third index as a vertex count. Pure relabeling: by duality
// the number of genus-g maps with n edges and x faces equals the number
// with n edges and x vertices, so the entries are reused as they are.
inline EdgeVertexTable reinterpret_as_vertices(EdgeVertexTable table) {
    if (table.axis() != Axis::faces)
        throw std::invalid_argument("reinterpret_as_vertices: axis is already vertices");
    table.axis_ = Axis::vertices;
    return table;
}

}  // namespace mapcount
