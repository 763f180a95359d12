#pragma once

#include <map>
#include <thread>
#include <utility>
#include <vector>

#include "mapcount/edge_vertex_table.hpp"
#include "mapcount/integer.hpp"
#include "mapcount/orbifold.hpp"

namespace mapcount {

/**
 * Table of unrooted map counts u_g(e,v): genus-g maps with e edges and v
 * vertices up to orientation-preserving homeomorphism. Computed from the
 * rooted table by quotient (Burnside) counting over the cyclic symmetry
 * periods dividing the dart count 2e.
 */
class UnrootedTable {
public:
    int max_genus() const { return max_genus_; }
    int max_edges() const { return max_edges_; }

    const Int& lookup(int genus, int edges, int vertices) const {
        check_bounds(genus, edges);
        const auto& r = rows_[genus][edges];
        if (vertices < 1 || vertices > static_cast<int>(r.size())) return zero_;
        return r[vertices - 1];
    }

    // u_g(e, 1..e+1-2g); empty when e < 2g.
    const std::vector<Int>& row(int genus, int edges) const {
        check_bounds(genus, edges);
        return rows_[genus][edges];
    }

    const Int& row_sum(int genus, int edges) const {
        check_bounds(genus, edges);
        return sums_[genus][edges];
    }

private:
    UnrootedTable(int max_genus, int max_edges)
        : max_genus_(max_genus), max_edges_(max_edges) {}

    void check_bounds(int genus, int edges) const {
        if (genus < 0 || genus > max_genus_ || edges < 0 || edges > max_edges_)
            throw std::out_of_range("UnrootedTable::lookup(" + std::to_string(genus) +
                                    ", " + std::to_string(edges) + ") outside table built for g <= " +
                                    std::to_string(max_genus_) + ", e <= " + std::to_string(max_edges_));
    }

    int max_genus_;
    int max_edges_;
    std::vector<std::vector<std::vector<Int>>> rows_;  // rows_[g][e]
    std::vector<std::vector<Int>> sums_;               // sums_[g][e]
    Int zero_;

    friend UnrootedTable build_unrooted_table(const EdgeVertexTable&, int);
};

namespace detail {

struct SignatureData {
    OrbifoldSignature sig;
    Int epimorphisms;
};

inline std::vector<SignatureData> admissible_signatures(int g, int period) {
    std::vector<SignatureData> out;
    for (auto& sig : enumerate_signatures(g, period)) {
        Int epi = count_epimorphisms(sig, period);
        if (epi != 0) out.push_back({std::move(sig), std::move(epi)});
    }
    return out;
}

/**
 * Number of rooted quotient maps realizing the pair (e, v) upstairs for
 * one signature and period. A quotient map consists of a rooted map on
 * the quotient surface with e' full edges plus s dangling semi-edges
 * (each ending in an order-2 branch point), and an assignment of the
 * remaining branch points to distinct vertices and distinct faces:
 *
 *   e = period*e' + (period/2)*s,
 *   v = period*v' - sum_{vertex branch points} (period - period/m).
 *
 * A map with s semi-edges and root anywhere corresponds to an ordinary
 * rooted map with C(2e'+s, s) insertion choices, and branch points of
 * equal order are interchangeable, so each stratum contributes one
 * binomial per order class.
 */
inline Int placement_sum(const OrbifoldSignature& sig, int period, int e, int v,
                         const EdgeVertexTable& rooted) {
    // group the branch orders into (order, multiplicity) classes
    std::vector<std::pair<int, int>> classes;
    for (int m : sig.branch_orders) {
        if (!classes.empty() && classes.back().first == m)
            ++classes.back().second;
        else
            classes.emplace_back(m, 1);
    }
    const int gamma = sig.quotient_genus;
    const int order2_count =
        (!classes.empty() && classes.front().first == 2) ? classes.front().second : 0;

    Int total = 0;
    std::vector<int> at_vertices(classes.size(), 0);

    for (int s = 0; s <= order2_count; ++s) {
        const long twice_full = 2L * e - static_cast<long>(period) * s;
        if (twice_full < 0) break;
        if (twice_full % (2L * period) != 0) continue;
        const int eq = static_cast<int>(twice_full / (2L * period));

        // distribute each class between vertices and faces
        auto walk = [&](auto&& self, std::size_t idx, long vertex_deficit) -> void {
            if (idx == classes.size()) {
                const long lifted = static_cast<long>(v) + vertex_deficit;
                if (lifted % period != 0) return;
                const int vq = static_cast<int>(lifted / period);
                if (vq < 1) return;
                const Int& rooted_count = rooted.lookup(gamma, eq, vq);
                if (rooted_count == 0) return;
                const int fq = eq + 2 - 2 * gamma - vq;

                Int weight = binomial(2 * eq + s, s);
                long vert_slots = vq, face_slots = fq;
                for (std::size_t c = 0; c < classes.size(); ++c) {
                    const int avail = classes[c].second - (c == 0 && classes[c].first == 2 ? s : 0);
                    const int a = at_vertices[c];
                    const int b = avail - a;
                    weight *= binomial(vert_slots, a);
                    vert_slots -= a;
                    weight *= binomial(face_slots, b);
                    face_slots -= b;
                    if (weight == 0) return;
                }
                total += weight * rooted_count;
                return;
            }
            const int avail =
                classes[idx].second - (idx == 0 && classes[idx].first == 2 ? s : 0);
            const long per_point =
                period - period / classes[idx].first;  // vertex lift deficit
            for (int a = 0; a <= avail; ++a) {
                at_vertices[idx] = a;
                self(self, idx + 1, vertex_deficit + a * per_point);
            }
            at_vertices[idx] = 0;
        };
        walk(walk, 0, 0);
    }
    return total;
}

inline Int cell_orbit_sum(int g, int e, int v, const EdgeVertexTable& rooted,
                          const std::vector<long>& dart_divisors,
                          const std::map<long, std::vector<SignatureData>>& sigs) {
    Int total = rooted.lookup(g, e, v);  // identity symmetry
    for (long period : dart_divisors) {
        if (period == 1) continue;
        for (const auto& sd : sigs.at(period))
            total += sd.epimorphisms *
                     placement_sum(sd.sig, static_cast<int>(period), e, v, rooted);
    }
    return total;
}

}  // namespace detail

/**
 * Number of (rooted map, order-`period` symmetry) pairs contributing to
 * the Burnside sum for u_g(e,v). period = 1 is the identity term
 * m_g(e,v); a period not dividing 2e contributes 0.
 */
inline Int quotient_contribution(int g, int e, int v, int period,
                                 const EdgeVertexTable& rooted) {
    if (rooted.axis() != Axis::vertices)
        throw std::invalid_argument("quotient_contribution: rooted table must count vertices");
    if (period < 1) throw std::invalid_argument("quotient_contribution: period must be >= 1");
    if (g > rooted.max_genus() || e > rooted.max_edges())
        throw TableTooSmallError("quotient_contribution: rooted table covers g <= " +
                                 std::to_string(rooted.max_genus()) + ", e <= " +
                                 std::to_string(rooted.max_edges()) + ", asked for (" +
                                 std::to_string(g) + ", " + std::to_string(e) + ")");
    if (period == 1) return rooted.lookup(g, e, v);
    if ((2L * e) % period != 0) return 0;

    Int total = 0;
    for (const auto& sd : detail::admissible_signatures(g, period))
        total += sd.epimorphisms * detail::placement_sum(sd.sig, period, e, v, rooted);
    return total;
}

/**
 * Builds the unrooted table over the same (genus, edges) range as the
 * rooted input:
 *
 *   u_g(e,v) = (1/2e) * sum_{period | 2e} quotient_contribution(g,e,v,period)
 *
 * The division must be exact; a remainder means the quotient counting is
 * wrong and raises ExactnessError. Cells are independent, so rows may be
 * computed concurrently.
 */
inline UnrootedTable build_unrooted_table(const EdgeVertexTable& rooted, int threads = 1) {
    if (rooted.axis() != Axis::vertices)
        throw std::invalid_argument("build_unrooted_table: rooted table must count vertices");

    const int max_genus = rooted.max_genus();
    const int max_edges = rooted.max_edges();
    UnrootedTable t(max_genus, max_edges);
    t.rows_.assign(max_genus + 1, std::vector<std::vector<Int>>(max_edges + 1));
    t.sums_.assign(max_genus + 1, std::vector<Int>(max_edges + 1, Int(0)));

    if (max_genus >= 0 && max_edges >= 0) {
        t.rows_[0][0] = {Int(1)};  // the vertex map
        t.sums_[0][0] = 1;
    }

    struct RowTask {
        int g, e;
    };
    std::vector<RowTask> tasks;
    for (int g = 0; g <= max_genus; ++g)
        for (int e = std::max(1, 2 * g); e <= max_edges; ++e) tasks.push_back({g, e});

    auto run_task = [&](const RowTask& task,
                        std::map<std::pair<int, long>, std::vector<detail::SignatureData>>& cache) {
        const int g = task.g, e = task.e;
        const auto dart_divisors = divisors(2L * e);
        std::map<long, std::vector<detail::SignatureData>> sigs;
        for (long period : dart_divisors) {
            if (period == 1) continue;
            auto key = std::make_pair(g, period);
            auto it = cache.find(key);
            if (it == cache.end())
                it = cache.emplace(key, detail::admissible_signatures(g, static_cast<int>(period))).first;
            sigs.emplace(period, it->second);
        }
        auto& out = t.rows_[g][e];
        out.resize(e + 1 - 2 * g);
        Int& sum = t.sums_[g][e];
        for (int v = 1; v <= e + 1 - 2 * g; ++v) {
            Int orbit = detail::cell_orbit_sum(g, e, v, rooted, dart_divisors, sigs);
            out[v - 1] = exact_quotient(orbit, 2UL * e, "unrooted quotient sum");
            sum += out[v - 1];
        }
    };

    if (threads <= 1 || tasks.size() <= 1) {
        std::map<std::pair<int, long>, std::vector<detail::SignatureData>> cache;
        for (const auto& task : tasks) run_task(task, cache);
    } else {
        const int nworkers = std::min<std::size_t>(threads, tasks.size());
        std::vector<std::thread> pool;
        pool.reserve(nworkers);
        for (int w = 0; w < nworkers; ++w) {
            pool.emplace_back([&, w] {
                std::map<std::pair<int, long>, std::vector<detail::SignatureData>> cache;
                for (std::size_t idx = w; idx < tasks.size(); idx += nworkers)
                    run_task(tasks[idx], cache);
            });
        }
        for (auto& th : pool) th.join();
    }
    return t;
}

}  // namespace mapcount
