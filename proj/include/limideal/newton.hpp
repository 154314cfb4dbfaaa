#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "limideal/ideal.hpp"

namespace limideal {

// minimal generating exponents of a monomial ideal
struct NewtonStaircase {
    int nvars = 0;
    std::vector<ExpVec> minimal_exponents;
};

inline NewtonStaircase newton_staircase(const QIdeal& I) {
    if (!I.is_monomial())
        throw user_error(errc::not_monomial, "staircase needs a monomial ideal");
    NewtonStaircase ns;
    ns.nvars = I.vars();
    ns.minimal_exponents = I.minimal_monomial_generators();
    std::sort(ns.minimal_exponents.begin(), ns.minimal_exponents.end(),
              [&](const ExpVec& a, const ExpVec& b) {
                  for (int i = 0; i < ns.nvars; ++i)
                      if (a[i] != b[i]) return a[i] > b[i];
                  return false;
              });
    return ns;
}

namespace np_detail {

// Exact rational simplex, Bland's rule.  Maximizes sum(lambda) subject to
// sum_i lambda_i * A_i <= v componentwise, sum lambda <= 1, lambda >= 0.
// The point v lies in convexhull(A) + R+^n exactly when the optimum is 1.
inline bool np_member(const std::vector<ExpVec>& A, const std::vector<Rational>& v, int nvars) {
    if (A.empty()) return false;
    for (auto& c : v)
        if (c < 0) return false;
    int m = static_cast<int>(A.size());
    int rows = nvars + 1;
    int cols = m + rows + 1;  // lambdas, slacks (last one for the convexity row), rhs
    std::vector<std::vector<Rational>> T(rows + 1, std::vector<Rational>(cols, Rational(0)));
    for (int j = 0; j < nvars; ++j) {
        for (int i = 0; i < m; ++i) T[j][i] = Rational(A[i][j]);
        T[j][m + j] = 1;
        T[j][cols - 1] = v[j];
    }
    for (int i = 0; i < m; ++i) T[nvars][i] = 1;
    T[nvars][m + nvars] = 1;
    T[nvars][cols - 1] = 1;
    // objective row: reduced costs of max sum(lambda), stored negated
    for (int i = 0; i < m; ++i) T[rows][i] = -1;
    std::vector<int> basis(rows);
    for (int j = 0; j < rows; ++j) basis[j] = m + j;
    for (;;) {
        int enter = -1;
        for (int c = 0; c < cols - 1; ++c)
            if (T[rows][c] < 0) {
                enter = c;
                break;
            }
        if (enter < 0) break;
        int leave = -1;
        Rational best;
        for (int r = 0; r < rows; ++r) {
            if (T[r][enter] <= 0) continue;
            Rational ratio = T[r][cols - 1] / T[r][enter];
            if (leave < 0 || ratio < best || (ratio == best && basis[r] < basis[leave])) {
                leave = r;
                best = ratio;
            }
        }
        if (leave < 0) break;  // unbounded direction cannot raise a capped objective
        Rational piv = T[leave][enter];
        for (int c = 0; c < cols; ++c) T[leave][c] /= piv;
        for (int r = 0; r <= rows; ++r) {
            if (r == leave || T[r][enter] == 0) continue;
            Rational f = T[r][enter];
            for (int c = 0; c < cols; ++c) T[r][c] -= f * T[leave][c];
        }
        basis[leave] = enter;
    }
    return T[rows][cols - 1] == 1;
}

}  // namespace np_detail

// v in convexhull(exponents) + R+^n, decided by exact linear feasibility
inline bool np_contains(const NewtonStaircase& ns, const std::vector<Rational>& point) {
    if (ns.nvars > 4)
        throw user_error(errc::unsupported_dimension,
                         "polyhedron membership is only supported up to 4 variables");
    if (static_cast<int>(point.size()) != ns.nvars)
        throw user_error(errc::variable_count_mismatch, "point size must match the ring");
    return np_detail::np_member(ns.minimal_exponents, point, ns.nvars);
}

// exponents that are vertices of the Newton polyhedron: dropping a vertex
// changes the hull, so membership of the dropped point fails
inline std::vector<ExpVec> np_vertices(const NewtonStaircase& ns) {
    std::vector<ExpVec> out;
    for (std::size_t k = 0; k < ns.minimal_exponents.size(); ++k) {
        std::vector<ExpVec> rest;
        for (std::size_t i = 0; i < ns.minimal_exponents.size(); ++i)
            if (i != k) rest.push_back(ns.minimal_exponents[i]);
        std::vector<Rational> pt(ns.nvars);
        for (int j = 0; j < ns.nvars; ++j) pt[j] = Rational(ns.minimal_exponents[k][j]);
        if (!np_detail::np_member(rest, pt, ns.nvars)) out.push_back(ns.minimal_exponents[k]);
    }
    return out;
}

// scaled Newton polyhedra coincide: Gamma(I1^p2) = Gamma(I2^p1), tested by
// mutual containment of the scaled generator exponents
inline bool newton_equivalent(const NewtonStaircase& s1, int p1, const NewtonStaircase& s2,
                              int p2) {
    if (s1.nvars != s2.nvars)
        throw user_error(errc::variable_count_mismatch, "staircases live in different rings");
    if (p1 < 1 || p2 < 1) throw user_error(errc::config_error, "scales must be positive");
    auto inside = [&](const NewtonStaircase& from, int pf, const NewtonStaircase& into, int pi) {
        for (auto& a : from.minimal_exponents) {
            std::vector<Rational> pt(from.nvars);
            for (int j = 0; j < from.nvars; ++j) pt[j] = Rational(pi * a[j], pf);
            if (!np_contains(into, pt)) return false;
        }
        return true;
    };
    return inside(s1, p1, s2, p2) && inside(s2, p2, s1, p1);
}

}  // namespace limideal
