#pragma once

#include <span>
#include <string>
#include <vector>

#include "mapcount/edge_table.hpp"
#include "mapcount/integer.hpp"

namespace mapcount {

/**
 * Numerator polynomial P_g(m) of the rational form of the genus-g edge
 * generating function
 *
 *   M_g(z) = z^{2g} P_g(m) / ((1-2m)^{3g-2} (1-3m)^2 (1-6m)^{5g-3}),
 *   m = (1 - sqrt(1 - 12z)) / 6.
 *
 * deg P_g <= 4g-4, so coeffs always holds exactly 4g-3 integers
 * (trailing zeros allowed).
 */
struct GenusPolynomial {
    int genus = 0;
    std::vector<Int> coeffs;  // coeffs[l] is the coefficient of m^l
};

// Fixed denominator data of the rational form, together with the numerator.
struct RationalForm {
    int genus = 0;
    GenusPolynomial numerator;
    int exp_1_2m = 0;  // exponent of (1-2m), equal to 3g-2
    int exp_1_3m = 2;  // exponent of (1-3m)
    int exp_1_6m = 0;  // exponent of (1-6m), equal to 5g-3
};

namespace detail {

inline void require_positive_genus(int g, const char* who) {
    if (g < 1) throw std::invalid_argument(std::string(who) + ": genus must be >= 1");
}

// Row of binomial coefficients C(top, 0..top).
inline std::vector<Int> binomial_row(int top) {
    std::vector<Int> row(top + 1);
    row[0] = 1;
    for (int i = 1; i <= top; ++i) row[i] = row[i - 1] * (top - i + 1) / i;
    return row;
}

inline std::vector<Int> power_row(unsigned long base, int top) {
    std::vector<Int> row(top + 1);
    row[0] = 1;
    for (int i = 1; i <= top; ++i) row[i] = row[i - 1] * base;
    return row;
}

}  // namespace detail

/**
 * Extracts the coefficients p_{g,l} of P_g(m) from the first rooted map
 * numbers of genus g:
 *
 *   p_{g,l} = sum_{n=2g}^{6g-4} (-1)^{l-n} m_g(n)
 *             sum_{i+j+k=l-n+2g} 2^{i+k} 3^{j+k}
 *               C(3g-2,i) C(n-2g+2,j) C(5g-3,k).
 *
 * The table must cover genus g up to 6g-4 edges.
 */
inline GenusPolynomial compute_pg(int g, const EdgeTable& edge_table) {
    detail::require_positive_genus(g, "compute_pg");
    if (edge_table.max_genus() < g || edge_table.max_edges() < 6 * g - 4)
        throw TableTooSmallError("compute_pg: needs rooted counts up to genus " +
                                 std::to_string(g) + " and " + std::to_string(6 * g - 4) +
                                 " edges, table covers g <= " + std::to_string(edge_table.max_genus()) +
                                 ", n <= " + std::to_string(edge_table.max_edges()));

    const int degree = 4 * g - 4;
    GenusPolynomial poly{g, std::vector<Int>(degree + 1, Int(0))};

    const auto bi = detail::binomial_row(3 * g - 2);
    const auto bk = detail::binomial_row(5 * g - 3);
    const auto pw2 = detail::power_row(2, degree + 1);
    const auto pw3 = detail::power_row(3, degree + 1);

    Int inner, term;
    for (int n = 2 * g; n <= 6 * g - 4; ++n) {
        const Int& mg = edge_table.lookup(g, n);
        if (mg == 0) continue;
        const auto bj = detail::binomial_row(n - 2 * g + 2);
        for (int l = 0; l <= degree; ++l) {
            const int t = l - n + 2 * g;
            if (t < 0) continue;
            inner = 0;
            for (int i = 0; i <= std::min<int>(t, 3 * g - 2); ++i) {
                for (int j = 0; j <= std::min<int>(t - i, n - 2 * g + 2); ++j) {
                    const int k = t - i - j;
                    if (k > 5 * g - 3) continue;
                    term = pw2[i + k] * pw3[j + k];
                    term *= bi[i];
                    term *= bj[j];
                    term *= bk[k];
                    inner += term;
                }
            }
            if ((l - n) % 2 == 0)
                poly.coeffs[l] += mg * inner;
            else
                poly.coeffs[l] -= mg * inner;
        }
    }
    return poly;
}

/**
 * One step of the fixed-genus recurrence, valid for n >= 6g-3:
 *
 *   m_g(n) = sum_{e=2g}^{n-1} (-1)^{n-e-1} m_g(e)
 *            sum_{i+j+k=n-e} 2^{j+k} 3^{i+k}
 *              C(e-2g+2,i) C(3g-2,j) C(5g-3,k).
 *
 * `prefix` supplies m_g(e) for e = 2g..n-1 in that order. Calling with
 * n < 6g-3 is a contract violation, not a computation.
 */
inline Int fixed_genus_next(int g, std::span<const Int> prefix, int n) {
    detail::require_positive_genus(g, "fixed_genus_next");
    if (n < 6 * g - 3)
        throw std::invalid_argument("fixed_genus_next: recurrence only holds for n >= 6g-3 = " +
                                    std::to_string(6 * g - 3) + ", got n = " + std::to_string(n));
    if (static_cast<int>(prefix.size()) != n - 2 * g)
        throw std::invalid_argument("fixed_genus_next: prefix must supply m_g(2g..n-1), expected " +
                                    std::to_string(n - 2 * g) + " values, got " +
                                    std::to_string(prefix.size()));

    const auto bj = detail::binomial_row(3 * g - 2);
    const auto bk = detail::binomial_row(5 * g - 3);
    const auto pw2 = detail::power_row(2, n - 2 * g);
    const auto pw3 = detail::power_row(3, n - 2 * g);

    Int result = 0, inner, term;
    for (int e = 2 * g; e <= n - 1; ++e) {
        const Int& me = prefix[e - 2 * g];
        if (me == 0) continue;
        const int t = n - e;
        const auto bi = detail::binomial_row(e - 2 * g + 2);
        inner = 0;
        for (int i = 0; i <= std::min<int>(t, e - 2 * g + 2); ++i) {
            for (int j = 0; j <= std::min<int>(t - i, 3 * g - 2); ++j) {
                const int k = t - i - j;
                if (k > 5 * g - 3) continue;
                term = pw2[j + k] * pw3[i + k];
                term *= bi[i];
                term *= bj[j];
                term *= bk[k];
                inner += term;
            }
        }
        if ((n - e - 1) % 2 == 0)
            result += me * inner;
        else
            result -= me * inner;
    }
    return result;
}

/**
 * Closed formula for m_g(n) in terms of the P_g coefficients:
 *
 *   m_g(n) = sum_{l=0}^{4g-4} p_{g,l}
 *            sum_{i+j+k=n-2g-l} 2^{i+k} 3^{j+k}
 *              C(i+3g-3,i) C(j+n-2g+2,j) C(k+5g-5,k).
 *
 * Empty summation domains make this 0 for n < 2g.
 */
inline Int closed_form_value(const GenusPolynomial& poly, int n) {
    const int g = poly.genus;
    detail::require_positive_genus(g, "closed_form_value");
    if (n < 0) throw std::invalid_argument("closed_form_value: negative edge count");

    Int result = 0, inner, term;
    const int tmax = n - 2 * g;
    if (tmax < 0) return result;
    const auto pw2 = detail::power_row(2, tmax);
    const auto pw3 = detail::power_row(3, tmax);
    for (int l = 0; l < static_cast<int>(poly.coeffs.size()); ++l) {
        if (poly.coeffs[l] == 0) continue;
        const int t = tmax - l;
        if (t < 0) continue;
        inner = 0;
        for (int i = 0; i <= t; ++i) {
            for (int j = 0; j <= t - i; ++j) {
                const int k = t - i - j;
                term = pw2[i + k] * pw3[j + k];
                term *= binomial(i + 3 * g - 3, i);
                term *= binomial(j + n - 2 * g + 2, j);
                term *= binomial(k + 5 * g - 5, k);
                inner += term;
            }
        }
        result += poly.coeffs[l] * inner;
    }
    return result;
}

// Dense text form of a polynomial in m, e.g. "1 - 3*m + 2*m^2".
inline std::string polynomial_text(const GenusPolynomial& poly) {
    std::string out;
    for (int l = 0; l < static_cast<int>(poly.coeffs.size()); ++l) {
        const Int& c = poly.coeffs[l];
        if (c == 0) continue;
        const bool negative = c < 0;
        Int mag = negative ? Int(-c) : c;
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        std::string coeff = to_decimal(mag);
        if (l == 0) {
            out += coeff;
        } else {
            if (mag != 1) out += coeff + "*";
            out += (l == 1) ? "m" : "m^" + std::to_string(l);
        }
    }
    if (out.empty()) out = "0";
    return out;
}

inline RationalForm make_rational_form(const GenusPolynomial& poly) {
    detail::require_positive_genus(poly.genus, "make_rational_form");
    RationalForm form;
    form.genus = poly.genus;
    form.numerator = poly;
    form.exp_1_2m = 3 * poly.genus - 2;
    form.exp_1_3m = 2;
    form.exp_1_6m = 5 * poly.genus - 3;
    return form;
}

// Canonical one-line rendering of the rational generating function, e.g.
// "z^2 * (1) / ((1-2m)^1 (1-3m)^2 (1-6m)^2)" for genus 1.
inline std::string render_rational_text(const RationalForm& form) {
    return "z^" + std::to_string(2 * form.genus) + " * (" + polynomial_text(form.numerator) +
           ") / ((1-2m)^" + std::to_string(form.exp_1_2m) + " (1-3m)^" + std::to_string(form.exp_1_3m) +
           " (1-6m)^" + std::to_string(form.exp_1_6m) + ")";
}

// Full rendering including the definition of the algebraic parameter m.
inline std::string render_rational(const RationalForm& form) {
    return render_rational_text(form) + "\n  where m = (1 - sqrt(1 - 12*z)) / 6\n";
}

}  // namespace mapcount
