#pragma once

// Independent cross-checks for the test suite.  Everything here avoids the
// Groebner engine on purpose: colengths come from exact linear algebra on
// multiplication matrices, monomial counts from direct lattice enumeration,
// and polyhedron membership from integer sumsets.  Slow is fine; these only
// run on small catalogue inputs.

#include <algorithm>
#include <map>
#include <vector>

#include "limideal/poly.hpp"
#include "limideal/rational.hpp"

namespace limideal::oracle {

inline void enumerate_below(int nvars, int D, int pos, ExpVec cur, std::vector<ExpVec>& out) {
    if (pos == nvars) {
        out.push_back(cur);
        return;
    }
    for (int v = 0; static_cast<int>(cur.deg) + v < D; ++v) {
        ExpVec next = cur;
        next.set(pos, v);
        enumerate_below(nvars, D, pos + 1, next, out);
    }
}

inline std::vector<ExpVec> monomials_below(int nvars, int D) {
    std::vector<ExpVec> out;
    enumerate_below(nvars, D, 0, ExpVec(nvars), out);
    return out;
}

inline std::vector<int> exp_key(const ExpVec& m) {
    std::vector<int> k(m.vars());
    for (int i = 0; i < m.vars(); ++i) k[i] = m[i];
    return k;
}

inline int rational_rank(std::vector<std::vector<Rational>>& rows) {
    if (rows.empty()) return 0;
    const int cols = static_cast<int>(rows[0].size());
    int rank = 0;
    for (int c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
        int pivot = -1;
        for (int r = rank; r < static_cast<int>(rows.size()); ++r)
            if (!(rows[r][c] == Rational(0))) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(rows[rank], rows[pivot]);
        Rational inv = Rational(1) / rows[rank][c];
        for (int j = c; j < cols; ++j) rows[rank][j] = rows[rank][j] * inv;
        for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
            if (r == rank) continue;
            Rational f = rows[r][c];
            if (f == Rational(0)) continue;
            for (int j = c; j < cols; ++j) rows[r][j] = rows[r][j] - f * rows[rank][j];
        }
        ++rank;
    }
    return rank;
}

// Count monomials below degree `cutoff` that survive modulo the span of all
// monomial multiples of the generators landing below degree D.  Columns are
// ordered by descending degree, so every echelon basis element pivots on its
// top degree part and the low degree survivors are exactly a basis of the
// quotient restricted below the cutoff.  The count can only overshoot the
// colength (the span misses deep cancellations when D is too small), never
// undershoot it, so agreement with an independently computed value certifies
// both sides.
inline long macaulay_quotient_below(const std::vector<QPoly>& gens, int nvars, int D, int cutoff) {
    std::vector<ExpVec> mons = monomials_below(nvars, D);
    std::stable_sort(mons.begin(), mons.end(),
                     [](const ExpVec& a, const ExpVec& b) { return a.deg > b.deg; });
    std::map<std::vector<int>, int> index;
    for (int i = 0; i < static_cast<int>(mons.size()); ++i) index[exp_key(mons[i])] = i;

    std::vector<std::vector<Rational>> rows;
    for (const QPoly& g : gens) {
        if (g.is_zero()) continue;
        int dg = 0;
        for (auto& t : g.terms()) dg = std::max(dg, static_cast<int>(t.m.deg));
        for (const ExpVec& m : mons) {
            if (static_cast<int>(m.deg) + dg >= D) continue;
            std::vector<Rational> row(mons.size(), Rational(0));
            for (auto& t : g.terms()) row[index.at(exp_key(m * t.m))] = t.c;
            rows.push_back(std::move(row));
        }
    }
    rational_rank(rows);
    std::vector<bool> pivot(mons.size(), false);
    for (auto& r : rows)
        for (size_t c = 0; c < r.size(); ++c)
            if (!(r[c] == Rational(0))) {
                pivot[c] = true;
                break;
            }
    long count = 0;
    for (size_t c = 0; c < mons.size(); ++c)
        if (!pivot[c] && static_cast<int>(mons[c].deg) < cutoff) ++count;
    return count;
}

// Colength of a zero dimensional ideal through the Macaulay construction:
// the window D must clear the staircase by more than the largest generator
// degree, so every standard monomial sits below the cutoff.
inline long macaulay_colength(const std::vector<QPoly>& gens, int nvars, int D) {
    int dg_max = 0;
    for (const QPoly& g : gens)
        for (auto& t : g.terms()) dg_max = std::max(dg_max, static_cast<int>(t.m.deg));
    return macaulay_quotient_below(gens, nvars, D, D - dg_max - 1);
}

// staircase count for a monomial ideal: lattice points divisible by no
// generator, enumerated inside the pure power box.  -1 when some axis has no
// pure power, i.e. the ideal is not zero dimensional.
inline long monomial_colength_brute(const std::vector<ExpVec>& exps, int nvars) {
    std::vector<int> box(nvars, -1);
    for (const ExpVec& a : exps) {
        int support = -1;
        bool pure = true;
        for (int i = 0; i < nvars; ++i)
            if (a[i] > 0) {
                if (support >= 0) pure = false;
                support = i;
            }
        if (pure && support >= 0 && (box[support] < 0 || a[support] < box[support]))
            box[support] = a[support];
        if (a.deg == 0) return 0;
    }
    for (int i = 0; i < nvars; ++i)
        if (box[i] < 0) return -1;
    long count = 0;
    std::vector<int> v(nvars, 0);
    while (true) {
        ExpVec m(nvars);
        for (int i = 0; i < nvars; ++i) m.set(i, v[i]);
        bool divisible = false;
        for (const ExpVec& a : exps)
            if (divides(a, m)) {
                divisible = true;
                break;
            }
        if (!divisible) ++count;
        int i = 0;
        while (i < nvars) {
            if (++v[i] < box[i]) break;
            v[i] = 0;
            ++i;
        }
        if (i == nvars) break;
    }
    return count;
}

// membership of a rational point in conv(A) + R^n_{>=0}, decided through
// integer sumsets: v lies inside iff some integer multiple k v dominates a
// sum of k generator exponents.  Returns true only with a witness; callers
// choose points whose witnesses exist within k_max.
inline bool np_member_lattice(const std::vector<ExpVec>& A, const std::vector<Rational>& v,
                              int k_max) {
    int n = static_cast<int>(v.size());
    for (int k = 1; k <= k_max; ++k) {
        std::vector<Int> kv(n);
        bool integral = true;
        for (int i = 0; i < n; ++i) {
            Rational s = Rational(k) * v[i];
            if (!is_integer(s)) {
                integral = false;
                break;
            }
            kv[i] = rat_num(s);
            if (kv[i] < 0) return false;
        }
        if (!integral) continue;
        // k-fold sums of A with repetition
        std::vector<std::vector<Int>> sums = {std::vector<Int>(n, Int(0))};
        for (int step = 0; step < k; ++step) {
            std::vector<std::vector<Int>> next;
            for (auto& s : sums)
                for (const ExpVec& a : A) {
                    std::vector<Int> t = s;
                    bool ok = true;
                    for (int i = 0; i < n; ++i) {
                        t[i] += a[i];
                        if (t[i] > kv[i]) ok = false;
                    }
                    if (ok) next.push_back(std::move(t));
                }
            std::sort(next.begin(), next.end());
            next.erase(std::unique(next.begin(), next.end()), next.end());
            sums = std::move(next);
            if (sums.empty()) break;
        }
        if (!sums.empty()) return true;
    }
    return false;
}

}  // namespace limideal::oracle
