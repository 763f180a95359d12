#include "mapcount/genus_series.hpp"

#include <catch2/catch_amalgamated.hpp>

#include "mapcount/edge_table.hpp"

using namespace mapcount;

namespace {

// Test-side series oracle: expand M_g(z) = z^{2g} P_g(m)/F_g(m) as a power
// series in z using m = z + 3 m^2 (equivalent to z = m(1-3m)) and compare
// coefficients with the recurrence table. Stays in exact integers end to
// end; all series are truncated at z^order.
struct Series {
    std::vector<Int> c;  // c[k] multiplies z^k

    static Series zero(int order) { return {std::vector<Int>(order + 1, Int(0))}; }
};

Series mul(const Series& a, const Series& b) {
    const int order = static_cast<int>(a.c.size()) - 1;
    Series r = Series::zero(order);
    for (int i = 0; i <= order; ++i) {
        if (a.c[i] == 0) continue;
        for (int j = 0; i + j <= order; ++j) r.c[i + j] += a.c[i] * b.c[j];
    }
    return r;
}

Series add(const Series& a, const Series& b) {
    Series r = a;
    for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] += b.c[i];
    return r;
}

Series scale(const Series& a, const Int& k) {
    Series r = a;
    for (auto& x : r.c) x *= k;
    return r;
}

// m(z) with z = m(1-3m): iterate m <- z + 3m^2.
Series algebraic_parameter(int order) {
    Series m = Series::zero(order);
    for (int it = 0; it <= order; ++it) {
        Series next = mul(m, m);
        for (auto& x : next.c) x *= 3;
        next.c[1] += 1;
        next.c[0] = 0;
        m = next;
    }
    return m;
}

Series power(const Series& base, int exp, int order) {
    Series r = Series::zero(order);
    r.c[0] = 1;
    for (int i = 0; i < exp; ++i) r = mul(r, base);
    return r;
}

// 1/f for a series with constant term 1.
Series invert(const Series& f, int order) {
    Series r = Series::zero(order);
    r.c[0] = 1;
    for (int k = 1; k <= order; ++k) {
        Int acc = 0;
        for (int i = 1; i <= k; ++i) acc += f.c[i] * r.c[k - i];
        r.c[k] = -acc;
    }
    return r;
}

Series polynomial_in(const GenusPolynomial& poly, const Series& m, int order) {
    Series r = Series::zero(order);
    Series mp = Series::zero(order);
    mp.c[0] = 1;
    for (std::size_t l = 0; l < poly.coeffs.size(); ++l) {
        if (l > 0) mp = mul(mp, m);
        r = add(r, scale(mp, poly.coeffs[l]));
    }
    return r;
}

std::vector<Int> expand_rational_form(const RationalForm& form, int order) {
    const Series m = algebraic_parameter(order);
    Series one_minus_2m = Series::zero(order), one_minus_3m = Series::zero(order),
           one_minus_6m = Series::zero(order);
    one_minus_2m.c[0] = one_minus_3m.c[0] = one_minus_6m.c[0] = 1;
    for (std::size_t i = 0; i < m.c.size(); ++i) {
        one_minus_2m.c[i] -= 2 * m.c[i];
        one_minus_3m.c[i] -= 3 * m.c[i];
        one_minus_6m.c[i] -= 6 * m.c[i];
    }
    Series denom = power(one_minus_2m, form.exp_1_2m, order);
    denom = mul(denom, power(one_minus_3m, form.exp_1_3m, order));
    denom = mul(denom, power(one_minus_6m, form.exp_1_6m, order));
    Series series = mul(polynomial_in(form.numerator, m, order), invert(denom, order));
    // multiply by z^{2g}
    std::vector<Int> out(order + 1, Int(0));
    for (int k = 0; k + 2 * form.genus <= order; ++k) out[k + 2 * form.genus] = series.c[k];
    return out;
}

}  // namespace

TEST_CASE("P_1 is the constant polynomial 1") {
    const auto table = build_edge_table(1, 2);
    const auto p1 = compute_pg(1, table);
    REQUIRE(p1.coeffs.size() == 1);  // degree bound 4g-4 = 0
    CHECK(p1.coeffs[0] == 1);
}

TEST_CASE("compute_pg refuses a table that is too small") {
    const auto table = build_edge_table(2, 6);  // genus 2 needs 6g-4 = 8 edges
    CHECK_THROWS_AS(compute_pg(2, table), TableTooSmallError);
    CHECK_THROWS_AS(compute_pg(0, table), std::invalid_argument);
}

TEST_CASE("closed formula evaluates the first toroidal counts") {
    const auto table = build_edge_table(1, 2);
    const auto p1 = compute_pg(1, table);
    CHECK(closed_form_value(p1, 1) == 0);  // empty summation domain
    CHECK(closed_form_value(p1, 2) == 1);
    CHECK(closed_form_value(p1, 3) == 20);  // terms 2 + 12 + 6
}

TEST_CASE("fixed-genus recurrence reproduces hand evaluations") {
    std::vector<Int> prefix = {Int(1)};  // m_1(2)
    CHECK(fixed_genus_next(1, prefix, 3) == 20);  // inner sum 6 + 2 + 12
    prefix.push_back(20);
    CHECK(fixed_genus_next(1, prefix, 4) == 307);  // 20*23 - 1*153
}

TEST_CASE("fixed-genus recurrence rejects n below 6g-3") {
    std::vector<Int> prefix = {Int(1), Int(20), Int(307), Int(4280)};
    CHECK_THROWS_AS(fixed_genus_next(2, prefix, 8), std::invalid_argument);
    std::vector<Int> empty;
    CHECK_THROWS_AS(fixed_genus_next(1, empty, 2), std::invalid_argument);
}

TEST_CASE("the three computation routes agree exactly") {
    const int max_edges = 24;
    const auto table = build_edge_table(4, max_edges);
    for (int g = 1; g <= 4; ++g) {
        const auto poly = compute_pg(g, table);
        // closed formula against the recurrence table
        for (int n = 0; n <= max_edges; ++n)
            CHECK(closed_form_value(poly, n) == table.lookup(g, n));
        // fixed-genus recurrence seeded with m_g(2g..6g-4) regenerates the rest
        std::vector<Int> prefix;
        for (int e = 2 * g; e <= 6 * g - 4; ++e) prefix.push_back(table.lookup(g, e));
        for (int n = 6 * g - 3; n <= max_edges; ++n) {
            const Int next = fixed_genus_next(g, prefix, n);
            CHECK(next == table.lookup(g, n));
            prefix.push_back(next);
        }
    }
}

TEST_CASE("rational form rendering is canonical") {
    const auto table = build_edge_table(2, 8);
    const auto p1 = compute_pg(1, table);
    const auto form1 = make_rational_form(p1);
    CHECK(render_rational_text(form1) == "z^2 * (1) / ((1-2m)^1 (1-3m)^2 (1-6m)^2)");
    CHECK(render_rational(form1) ==
          "z^2 * (1) / ((1-2m)^1 (1-3m)^2 (1-6m)^2)\n  where m = (1 - sqrt(1 - 12*z)) / 6\n");

    const auto form2 = make_rational_form(compute_pg(2, table));
    CHECK(form2.exp_1_2m == 4);
    CHECK(form2.exp_1_3m == 2);
    CHECK(form2.exp_1_6m == 7);
    // stable across runs
    CHECK(render_rational(form2) == render_rational(form2));
}

TEST_CASE("expanding the rational form recovers the series coefficients") {
    const auto table = build_edge_table(3, 24);
    for (int g = 1; g <= 3; ++g) {
        const int order = 6 * g + 6;
        const auto form = make_rational_form(compute_pg(g, table));
        const auto coeffs = expand_rational_form(form, order);
        for (int n = 0; n <= order; ++n) CHECK(coeffs[n] == table.lookup(g, n));
    }
}
