#pragma once

#include "mubar/invariants.hpp"
#include "mubar/seifert.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace mubar {

/// Expansion a/b = c_1 - 1/(c_2 - 1/(... - 1/c_k)) with all c_j >= 2,
/// for 0 < b < a coprime.
inline std::vector<Int> negative_continued_fraction(Int a, Int b) {
    if (b < 1 || b >= a)
        throw input_error("negative_continued_fraction: need 0 < b < a, got a = " + to_string(a) +
                          ", b = " + to_string(b));
    if (boost::multiprecision::gcd(a, b) != 1)
        throw input_error("negative_continued_fraction: arguments must be coprime");
    std::vector<Int> out;
    while (true) {
        const Int c = (a + b - 1) / b;  // ceil(a/b), >= 2 since 0 < b < a
        out.push_back(c);
        const Int next = c * b - a;
        a = b;
        b = next;
        if (b == 0) return out;
    }
}

/// Star-shaped plumbing tree. Vertex 0 is the central node; each arm is a
/// chain whose first entry is adjacent to the center.
struct PlumbingGraph {
    std::vector<Int> framings;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<int>> arms;
    int center = 0;

    int size() const { return static_cast<int>(framings.size()); }
};

/// Builds the negative definite plumbing bounding Sigma(a_1,...,a_n) with
/// Euler number -1/(a_1...a_n): arm i carries the negated expansion of
/// a_i/b_i' where b_i' = (-b_i) mod a_i, and the central framing is
/// b_0 = -1/A - sum b_i'/a_i (an integer, asserted). For Sigma(2,3,5) this
/// is the E8 graph.
inline PlumbingGraph build_plumbing(const SeifertData& y) {
    const CoefficientVector cv = solve_coefficients(y);
    const Int prod = y.product();
    PlumbingGraph g;
    Int rest = 0;
    std::vector<Int> dual(y.n());
    for (int i = 0; i < y.n(); ++i) {
        dual[i] = detail::positive_mod(-cv.b[i], y.a[i]);
        rest += dual[i] * (prod / y.a[i]);
    }
    const Int num = -1 - rest;  // b0 * A
    if (num % prod != 0)
        throw internal_error("build_plumbing: central framing is not integral for " + y.name());
    g.framings.push_back(num / prod);
    for (int i = 0; i < y.n(); ++i) {
        const std::vector<Int> expansion = negative_continued_fraction(y.a[i], dual[i]);
        std::vector<int> arm;
        int prev = g.center;
        for (const Int& c : expansion) {
            g.framings.push_back(-c);
            const int id = g.size() - 1;
            g.edges.emplace_back(prev, id);
            arm.push_back(id);
            prev = id;
        }
        g.arms.push_back(std::move(arm));
    }
    return g;
}

inline std::string to_dot(const PlumbingGraph& g) {
    std::string s = "graph plumbing {\n";
    for (int i = 0; i < g.size(); ++i)
        s += "  v" + std::to_string(i) + " [label=\"" + to_string(g.framings[i]) + "\"];\n";
    for (const auto& [u, v] : g.edges)
        s += "  v" + std::to_string(u) + " -- v" + std::to_string(v) + ";\n";
    return s + "}\n";
}

/// Symmetric intersection matrix of a plumbing: framings on the diagonal,
/// 1 for each edge.
struct IntersectionForm {
    std::vector<std::vector<Int>> m;

    int dim() const { return static_cast<int>(m.size()); }
};

/// Exact determinant by fraction-free (Bareiss) elimination.
inline Int determinant(const IntersectionForm& q) {
    auto m = q.m;
    const int n = q.dim();
    if (n == 0) return 1;
    Int prev = 1;
    int sgn = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            int j = k + 1;
            while (j < n && m[j][k] == 0) ++j;
            if (j == n) return 0;
            std::swap(m[k], m[j]);
            sgn = -sgn;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sgn * m[n - 1][n - 1];
}

/// Exact signature: symmetric congruence elimination over rationals, adding
/// the sign of each pivot. Diagonal exchanges only; nonsingular input with a
/// fully zero trailing diagonal is rejected (cannot occur for definite
/// forms).
inline int signature(const IntersectionForm& q) {
    const int n = q.dim();
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[i][j] = Rational(q.m[i][j]);
    int sig = 0;
    for (int k = 0; k < n; ++k) {
        if (m[k][k] == 0) {
            int j = k + 1;
            while (j < n && m[j][j] == 0) ++j;
            if (j == n)
                throw internal_error("signature: zero pivot without symmetric exchange");
            std::swap(m[k], m[j]);
            for (auto& row : m) std::swap(row[k], row[j]);
        }
        sig += m[k][k] > 0 ? 1 : -1;
        for (int i = k + 1; i < n; ++i) {
            if (m[i][k] == 0) continue;
            const Rational f = m[i][k] / m[k][k];
            for (int j = k + 1; j < n; ++j) m[i][j] -= f * m[k][j];
            m[i][k] = 0;
        }
    }
    return sig;
}

inline IntersectionForm intersection_form(const PlumbingGraph& g) {
    const int n = g.size();
    IntersectionForm q;
    q.m.assign(n, std::vector<Int>(n, 0));
    for (int i = 0; i < n; ++i) q.m[i][i] = g.framings[i];
    for (const auto& [u, v] : g.edges) {
        q.m[u][v] = 1;
        q.m[v][u] = 1;
    }
    const Int det = determinant(q);
    if (det != 1 && det != -1)
        throw internal_error("intersection_form: boundary is not an integral homology sphere "
                             "(det = " + to_string(det) + ")");
    if (signature(q) != -n)
        throw internal_error("intersection_form: matrix is not negative definite");
    return q;
}

/// The integral Wu class: the unique characteristic vector with 0/1
/// coordinates, i.e. the solution of Q w = diag(Q) mod 2.
struct WuClass {
    std::vector<int> coords;
};

inline WuClass wu_class(const IntersectionForm& q) {
    const int n = q.dim();
    const int words = (n + 1 + 63) / 64;
    // bit rows of [Q mod 2 | diag mod 2]
    std::vector<std::vector<std::uint64_t>> rows(n, std::vector<std::uint64_t>(words, 0));
    auto set_bit = [&](int r, int c) { rows[r][c / 64] |= std::uint64_t(1) << (c % 64); };
    auto get_bit = [&](int r, int c) {
        return (rows[r][c / 64] >> (c % 64)) & std::uint64_t(1);
    };
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            if (q.m[i][j] % 2 != 0) set_bit(i, j);
        if (q.m[i][i] % 2 != 0) set_bit(i, n);
    }
    std::vector<int> pivot_col(n, -1);
    int rank = 0;
    for (int col = 0; col < n && rank < n; ++col) {
        int sel = -1;
        for (int i = rank; i < n; ++i)
            if (get_bit(i, col)) {
                sel = i;
                break;
            }
        if (sel < 0) continue;
        std::swap(rows[rank], rows[sel]);
        for (int i = 0; i < n; ++i) {
            if (i == rank || !get_bit(i, col)) continue;
            for (int w = 0; w < words; ++w) rows[i][w] ^= rows[rank][w];
        }
        pivot_col[rank] = col;
        ++rank;
    }
    if (rank != n)
        throw internal_error("wu_class: characteristic system is singular mod 2");
    WuClass w;
    w.coords.assign(n, 0);
    for (int r = 0; r < n; ++r) w.coords[pivot_col[r]] = static_cast<int>(get_bit(r, n));
    return w;
}

inline Int wu_self_intersection(const IntersectionForm& q, const WuClass& w) {
    Int total = 0;
    for (int i = 0; i < q.dim(); ++i) {
        if (!w.coords[i]) continue;
        for (int j = 0; j < q.dim(); ++j)
            if (w.coords[j]) total += q.m[i][j];
    }
    return total;
}

/// mu-bar by its definition: (sign(X) - w.w)/8 for the plumbed X bounding Y.
/// Divisibility by 8 (van der Blij) is asserted.
inline Int mubar_oracle(const SeifertData& y) {
    const IntersectionForm q = intersection_form(build_plumbing(y));
    const Int num = Int(signature(q)) - wu_self_intersection(q, wu_class(q));
    if (num % 8 != 0)
        throw internal_error("mubar_oracle: sign - w.w = " + to_string(num) +
                             " is not divisible by 8 for " + y.name());
    return num / 8;
}

/// Index of the spin^c Dirac operator with c_1 dual to the Wu class, under
/// the spectral boundary condition:
///   ind = -(1/2 eta_Dir + 1/8 eta_Sign) - sign(X)/8 + w.w/8.
/// Vanishes identically on valid input.
inline Rational aps_index(const SeifertData& y) {
    const IntersectionForm q = intersection_form(build_plumbing(y));
    const Int ww = wu_self_intersection(q, wu_class(q));
    return -eta_combination(y) - Rational(Int(signature(q)), 8) + Rational(ww, 8);
}

} // namespace mubar
