#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "limideal/family.hpp"
#include "limideal/ideal.hpp"
#include "limideal/modp.hpp"

namespace limideal {

// lengths of the powers I^k, k = 1..k_max
struct SamuelTable {
    int nvars = 0;
    std::vector<std::pair<int, long>> entries;
};

namespace mult_detail {

inline ExpVec mono_product(const ExpVec& a, const ExpVec& b, int nvars) {
    ExpVec out(nvars);
    for (int i = 0; i < nvars; ++i) out.set(i, a[i] + b[i]);
    return out;
}

// antichain of the divisibility order: drop every multiple of another element
inline std::vector<ExpVec> minimal_exponents(std::vector<ExpVec> ms) {
    std::sort(ms.begin(), ms.end(), [](const ExpVec& a, const ExpVec& b) { return a.deg < b.deg; });
    std::vector<ExpVec> keep;
    for (auto& m : ms) {
        bool covered = false;
        for (auto& h : keep)
            if (divides(h, m)) {
                covered = true;
                break;
            }
        if (!covered) keep.push_back(m);
    }
    return keep;
}

// colength of a monomial ideal straight off the staircase, no basis computation
inline long staircase_colength(const std::vector<ExpVec>& gens, int nvars) {
    for (auto& g : gens)
        if (g.deg == 0) return 0;
    long box = 1;
    for (int i = 0; i < nvars; ++i) {
        int best = -1;
        for (auto& g : gens) {
            bool pure = g[i] > 0;
            for (int j = 0; pure && j < nvars; ++j)
                if (j != i && g[j] > 0) pure = false;
            if (pure && (best < 0 || g[i] < best)) best = g[i];
        }
        if (best < 0)
            throw user_error(errc::not_zero_dimensional,
                             "monomial ideal has no pure power in every variable");
        box += best - 1;
    }
    long total = 0;
    for (long c : standard_monomial_degree_counts(gens, nvars, static_cast<int>(box))) total += c;
    return total;
}

inline bool is_homogeneous(const QPoly& f) {
    auto& ts = f.terms();
    for (auto& t : ts)
        if (t.m.deg != ts[0].m.deg) return false;
    return true;
}

inline long coeff_draw(std::mt19937_64& rng, int height) {
    auto span = static_cast<unsigned long long>(2 * height + 1);
    return static_cast<long>(rng() % span) - height;
}

inline QPoly random_combo(const std::vector<const QPoly*>& gens, const MonomialOrder& ord,
                          int nvars, std::mt19937_64& rng, int height) {
    for (;;) {
        QPoly acc = QPoly::monomial(ord, ExpVec(nvars), Rational(0));
        bool hit = false;
        for (auto* g : gens) {
            long c = coeff_draw(rng, height);
            if (c == 0) continue;
            hit = true;
            acc = acc + QPoly::monomial(ord, ExpVec(nvars), Rational(c)) * (*g);
        }
        if (hit && !acc.is_zero()) return acc;
    }
}

struct TrialResult {
    long value = -1;
    bool certified = false;
    int plateau = -1;
    bool aborted = false;  // value exceeded the caller's pruning bound
};

// exact integer-lane walk: l(T + m^D) accepted on adjacent equality
inline TrialResult exact_local_trial(const std::vector<QPoly>& combos, int nvars, long stop_above,
                                     int max_bound, const GroebnerOptions& gopt) {
    TrialResult r;
    long prev = -1;
    int prev_d = -1;
    for (int D = 2; D <= max_bound; ++D) {
        long v = truncated_colength(combos, nvars, D, gopt);
        if (prev >= 0 && prev_d == D - 1 && v == prev) {
            r.value = v;
            r.certified = true;
            r.plateau = D - 1;
            return r;
        }
        if (stop_above >= 0 && v > stop_above) {
            r.value = v;
            r.aborted = true;
            return r;
        }
        prev = v;
        prev_d = D;
    }
    r.value = prev;
    return r;
}

inline TrialResult fq_local_trial(const std::vector<QPoly>& combos, int nvars, int hint,
                                  int max_bound, int prime_start, long step_budget,
                                  long stop_above) {
    for (int a = 0; a < 8; ++a) {
        FqOptions fo;
        fo.prime_index = (prime_start + a) % 8;
        fo.step_budget = step_budget;
        try {
            FqColength c = hint > 0
                               ? fq_local_colength_down(combos, nvars, hint, max_bound, fo,
                                                        stop_above)
                               : fq_local_colength(combos, nvars, 4, max_bound, fo, stop_above);
            TrialResult r;
            r.value = c.value;
            r.certified = c.certified;
            r.plateau = static_cast<int>(c.box_bound);
            r.aborted = !c.certified && stop_above >= 0 && c.value > stop_above;
            return r;
        } catch (const bad_prime&) {
            continue;
        }
    }
    return {};
}

// smallest c with c^n >= lb, used to guess the local plateau of a trial
inline int cold_depth_hint(long lb, int nvars) {
    if (lb <= 0) return -1;
    int c = 1;
    for (;;) {
        long p = 1;
        for (int i = 0; i < nvars; ++i) p *= c;
        if (p >= lb) break;
        ++c;
    }
    return nvars * (c - 1) + 2;
}

// Complete-intersection certificate for homogeneous input: pick degrees
// d_1..d_n from the basis degrees with product exactly `target`, draw one
// random combination inside each chosen degree, and run the capped engine.
// A zero slice certifies the n forms are a regular sequence, so they span a
// complete intersection inside I of multiplicity prod d_i = target; combined
// with the caller's proof that e(I) >= target this pins e(I) = target.  The
// certificate cannot fire when target < e(I): an artinian complete
// intersection inside I would have multiplicity >= e(I) > target, and a zero
// slice mod q forces the rational slice to vanish as well.
inline bool structured_ci_certificate(const std::vector<QPoly>& gb, int nvars, long target,
                                      std::mt19937_64& rng, int height, long step_budget) {
    std::map<int, std::vector<const QPoly*>> pieces;
    for (auto& g : gb) {
        if (!is_homogeneous(g)) return false;
        pieces[g.total_degree()].push_back(&g);
    }
    std::vector<int> ds;
    std::vector<int> cnt;
    for (auto& [d, v] : pieces) {
        ds.push_back(d);
        cnt.push_back(static_cast<int>(v.size()));
    }
    std::vector<int> best, cur;
    long best_sum = -1;
    auto rec = [&](auto&& self, std::size_t idx, int slots, long rem, long sum) -> void {
        if (slots == 0) {
            if (rem == 1 && (best_sum < 0 || sum < best_sum)) {
                best = cur;
                best_sum = sum;
            }
            return;
        }
        if (idx == ds.size()) return;
        self(self, idx + 1, slots, rem, sum);
        if (cnt[idx] > 0 && rem % ds[idx] == 0) {
            --cnt[idx];
            cur.push_back(ds[idx]);
            self(self, idx, slots - 1, rem / ds[idx], sum + ds[idx]);
            cur.pop_back();
            ++cnt[idx];
        }
    };
    rec(rec, 0, nvars, target, 0);
    if (best_sum < 0) return false;

    std::map<int, int> times;
    for (int d : best) ++times[d];
    int cap = static_cast<int>(best_sum) - nvars + 2;
    for (int attempt = 0; attempt < 3; ++attempt) {
        std::vector<QPoly> combos;
        for (auto& [d, t] : times) {
            auto& piece = pieces[d];
            MonomialOrder ord = piece.front()->order();
            for (int i = 0; i < t; ++i)
                combos.push_back(random_combo(piece, ord, nvars, rng, height));
        }
        FqOptions fo;
        fo.prime_index = attempt;
        fo.step_budget = step_budget;
        try {
            if (fq_capped_slices(combos, nvars, cap, fo).first_zero_slice() >= 0) return true;
        } catch (const bad_prime&) {
        }
    }
    return false;
}

}  // namespace mult_detail

inline SamuelTable samuel_table(const QIdeal& I, int k_max) {
    int n = I.vars();
    if (k_max < n + 2)
        throw user_error(errc::config_error, "power table needs k_max >= nvars + 2");
    SamuelTable tab;
    tab.nvars = n;
    if (I.is_monomial()) {
        auto base = I.minimal_monomial_generators();
        std::vector<ExpVec> cur = base;
        for (int k = 1; k <= k_max; ++k) {
            long len = mult_detail::staircase_colength(cur, n);
            if (len == 0) throw user_error(errc::config_error, "unit ideal has no power table");
            tab.entries.emplace_back(k, len);
            if (k < k_max) {
                std::vector<ExpVec> next;
                next.reserve(cur.size() * base.size());
                for (auto& a : cur)
                    for (auto& b : base) next.push_back(mult_detail::mono_product(a, b, n));
                cur = mult_detail::minimal_exponents(std::move(next));
            }
        }
    } else {
        long l1 = I.colength();
        if (l1 == 0) throw user_error(errc::config_error, "unit ideal has no power table");
        tab.entries.emplace_back(1, l1);
        QIdeal cur = I;
        for (int k = 2; k <= k_max; ++k) {
            cur = (cur * I).canonicalized();
            tab.entries.emplace_back(k, cur.colength());
        }
    }
    for (std::size_t i = 1; i < tab.entries.size(); ++i)
        if (tab.entries[i].second <= tab.entries[i - 1].second)
            throw internal_error(errc::internal_assertion, "power lengths must strictly increase");
    return tab;
}

struct MultiplicityPolicy {
    int k_budget = -1;              // finite differences: powers to try; -1 means 2n+4
    long fd_work_cap = 3000;        // run differences only when l(I) * k_budget^n stays below
    int trials = 8;                 // random-section draws
    int coeff_height = 101;         // coefficients uniform in [-height, height]
    std::uint64_t seed = 20240817ull;
    long lower_bound_hint = -1;     // externally certified lower bound for e(I)
    int depth_hint = -1;            // expected local plateau degree for the mod-q walk
    long exact_trial_gate = 64;     // exact-lane trials when e is known and at most this
    int fq_max_bound = 72;
    long fq_step_budget = 2000000;
    bool force_full_trials = false;  // keep drawing after an early certificate
};

struct MultiplicityReport {
    long length = 0;
    long multiplicity = 0;
    std::string method;  // finite-differences | generic-sections | cross-checked
    bool complete_intersection = false;
    bool certified = false;
    int trials_used = 0;
    int plateau = -1;  // local box bound reached by the winning trial
};

// true when the zero set is exactly the origin: every coordinate is nilpotent
// modulo I, and nilpotency order is bounded by the colength
inline bool supported_only_at_origin(const QIdeal& I) {
    long l = I.colength();
    if (l == 0) return false;
    // homogeneous + finite colength: the zero set is a cone with finitely
    // many points, hence exactly the origin
    bool homog = true;
    for (const auto& g : I.gens())
        if (!g.is_homogeneous()) { homog = false; break; }
    if (homog) return true;
    for (int i = 0; i < I.vars(); ++i) {
        QPoly zi = QPoly::monomial(I.default_order(), ExpVec::unit(I.vars(), i, static_cast<int>(l)),
                                   Rational(1));
        if (!I.contains(zi)) return false;
    }
    return true;
}

namespace mult_detail {

// n-th finite differences of l(I^k); the common value of two consecutive
// agreeing differences is the multiplicity
inline long fd_multiplicity(const QIdeal& I, int k_budget) {
    int n = I.vars();
    std::vector<long> binom(n + 1, 1);
    for (int i = 1; i <= n; ++i) binom[i] = binom[i - 1] * (n - i + 1) / i;
    std::vector<long> len;
    QIdeal cur = I;
    bool have_prev = false;
    long prev_diff = 0;
    for (int k = 1; k <= k_budget; ++k) {
        if (k > 1) cur = (cur * I).canonicalized();
        len.push_back(cur.colength());
        int j = static_cast<int>(len.size()) - 1 - n;
        if (j < 0) continue;
        long d = 0;
        for (int i = 0; i <= n; ++i) {
            long c = binom[i] * len[j + i];
            if ((n - i) & 1)
                d -= c;
            else
                d += c;
        }
        if (have_prev && d == prev_diff) return d;
        have_prev = true;
        prev_diff = d;
    }
    throw user_error(errc::no_stabilization,
                     "length differences did not stabilize within the power budget");
}

}  // namespace mult_detail

inline MultiplicityReport hs_multiplicity(const QIdeal& I, const MultiplicityPolicy& pol = {}) {
    int n = I.vars();
    long ell = I.colength();
    if (ell == 0) throw user_error(errc::config_error, "unit ideal has no multiplicity");
    int k_budget = pol.k_budget > 0 ? pol.k_budget : 2 * n + 4;
    if (k_budget < n + 2)
        throw user_error(errc::config_error, "difference budget needs k_budget >= nvars + 2");

    bool origin_only = supported_only_at_origin(I);
    bool fq_ok = n <= 6;
    double fd_work = static_cast<double>(ell);
    for (int i = 0; i < n; ++i) fd_work *= k_budget;
    bool do_fd = fd_work <= static_cast<double>(pol.fd_work_cap) || !origin_only || !fq_ok;

    long e_fd = -1;
    if (do_fd) e_fd = mult_detail::fd_multiplicity(I, k_budget);

    long e_tr = -1;
    bool sandwiched = false;
    int trials_done = 0;
    int plateau_of_min = -1;
    if (origin_only && pol.trials > 0) {
        const auto& gb = I.groebner();
        std::vector<const QPoly*> gens;
        for (auto& g : gb) gens.push_back(&g);
        std::mt19937_64 rng(pol.seed);
        long lb = std::max({pol.lower_bound_hint, e_fd, ell});

        long cur_min = -1;
        if (fq_ok && lb > 0 &&
            mult_detail::structured_ci_certificate(gb, n, lb, rng, pol.coeff_height,
                                                   pol.fq_step_budget)) {
            cur_min = lb;
            sandwiched = true;
        }

        bool exact_lane = e_fd > 0 && e_fd <= pol.exact_trial_gate;
        int hint = pol.depth_hint > 0 ? pol.depth_hint : mult_detail::cold_depth_hint(lb, n);
        if ((!sandwiched || pol.force_full_trials) && (exact_lane || fq_ok)) {
            MonomialOrder ord = I.default_order();
            for (int t = 0; t < pol.trials; ++t) {
                for (int redraw = 0; redraw < 3; ++redraw) {
                    std::vector<QPoly> combos;
                    for (int i = 0; i < n; ++i)
                        combos.push_back(
                            mult_detail::random_combo(gens, ord, n, rng, pol.coeff_height));
                    mult_detail::TrialResult r;
                    if (exact_lane) {
                        long stop = 4 * e_fd + 8;
                        if (cur_min >= 0) stop = std::min(stop, cur_min - 1);
                        r = mult_detail::exact_local_trial(combos, n, stop,
                                                           static_cast<int>(4 * e_fd + 12),
                                                           I.options());
                    } else {
                        long stop = cur_min >= 0 ? cur_min - 1 : -1;
                        try {
                            r = mult_detail::fq_local_trial(combos, n, hint, pol.fq_max_bound,
                                                            t % 8, pol.fq_step_budget, stop);
                        } catch (const user_error& e) {
                            if (e.code != errc::step_budget_exceeded) throw;
                            continue;  // runaway draw, try a fresh one
                        }
                    }
                    if (r.certified) {
                        if (r.value < lb)
                            throw internal_error(errc::internal_assertion,
                                                 "trial colength below the certified lower bound");
                        if (cur_min < 0 || r.value < cur_min) {
                            cur_min = r.value;
                            plateau_of_min = r.plateau;
                        }
                        if (r.plateau > 0) hint = r.plateau + 2;
                        ++trials_done;
                        break;
                    }
                    if (r.aborted) {  // proved it cannot lower the minimum
                        ++trials_done;
                        break;
                    }
                }
                if (cur_min >= 0 && lb > 0 && cur_min == lb) {
                    sandwiched = true;
                    if (!pol.force_full_trials) break;
                }
            }
        }
        e_tr = cur_min;
    }

    MultiplicityReport rep;
    rep.length = ell;
    rep.trials_used = trials_done;
    rep.plateau = plateau_of_min;
    if (e_fd >= 0 && e_tr >= 0) {
        if (e_fd != e_tr)
            throw internal_error(errc::method_disagreement,
                                 "finite differences and generic sections disagree");
        rep.multiplicity = e_fd;
        rep.method = "cross-checked";
        rep.certified = true;
    } else if (e_fd >= 0) {
        rep.multiplicity = e_fd;
        rep.method = "finite-differences";
        rep.certified = true;
    } else if (e_tr >= 0) {
        rep.multiplicity = e_tr;
        rep.method = "generic-sections";
        rep.certified = sandwiched;
    } else {
        throw user_error(errc::step_budget_exceeded,
                         "no multiplicity method completed within the configured budgets");
    }
    if (rep.multiplicity < ell)
        throw internal_error(errc::internal_assertion, "multiplicity below colength");
    rep.complete_intersection = rep.multiplicity == rep.length;
    return rep;
}

// multiplicities down a limit tower; collision_N > 0 asserts the family
// collides at a single point with that many points, which certifies the lower
// bound p^n * N for row p and allows early sandwich stops
inline std::vector<MultiplicityReport> tower_multiplicities(const LimitTower& tower,
                                                            long collision_N,
                                                            const MultiplicityPolicy& base = {}) {
    std::vector<MultiplicityReport> out;
    int n = tower.nvars;
    int last_plateau = -1;
    int last_p = 0;
    for (int p = 1; p <= tower.p_max; ++p) {
        MultiplicityPolicy pol = base;
        if (collision_N > 0) {
            long bound = collision_N;
            for (int i = 0; i < n; ++i) bound *= p;
            pol.lower_bound_hint = std::max(pol.lower_bound_hint, bound);
            if (bound > 200) pol.trials = std::min(pol.trials, 2);
        }
        if (last_plateau > 0 && last_p > 0 && pol.depth_hint <= 0)
            pol.depth_hint = last_plateau * p / last_p + 3;
        MultiplicityReport rep = hs_multiplicity(tower.limits[p - 1], pol);
        if (rep.plateau > 0) {
            last_plateau = rep.plateau;
            last_p = p;
        }
        out.push_back(std::move(rep));
    }
    return out;
}

struct VolumeBounds {
    int nvars = 0;
    // (p, e(I_(p)), p^-n e(I_(p)))
    std::vector<std::tuple<int, long, Rational>> per_p;
    Rational upper_bound;
    // (p, n! p^-n l(I_(p)))
    std::vector<std::pair<int, Rational>> length_estimator;
};

inline VolumeBounds graded_volume(const LimitTower& tower,
                                  const std::vector<MultiplicityReport>& reports) {
    if (tower.limits.empty()) throw user_error(errc::config_error, "empty tower");
    if (reports.size() != tower.limits.size())
        throw internal_error(errc::internal_assertion, "one multiplicity report per tower row");
    VolumeBounds vb;
    int n = tower.nvars;
    vb.nvars = n;
    long fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    bool first = true;
    for (int p = 1; p <= tower.p_max; ++p) {
        long pn = 1;
        for (int i = 0; i < n; ++i) pn *= p;
        Rational scaled = Rational(reports[p - 1].multiplicity) / Rational(pn);
        vb.per_p.emplace_back(p, reports[p - 1].multiplicity, scaled);
        vb.length_estimator.emplace_back(p,
                                         Rational(fact * tower.generic_lengths[p - 1]) /
                                             Rational(pn));
        if (first || scaled < vb.upper_bound) vb.upper_bound = scaled;
        first = false;
    }
    return vb;
}

inline VolumeBounds graded_volume(const LimitTower& tower, const MultiplicityPolicy& pol = {}) {
    return graded_volume(tower, tower_multiplicities(tower, -1, pol));
}

// smallest p with e(I_(p)) = p^n N, for families collapsing to the origin only
inline std::optional<int> stabilization_index(const LimitTower& tower, long N,
                                              const std::vector<MultiplicityReport>& reports) {
    if (N < 1) throw user_error(errc::config_error, "point count must be positive");
    if (tower.limits.empty()) throw user_error(errc::config_error, "empty tower");
    if (!supported_only_at_origin(tower.limits.front()))
        throw user_error(errc::not_single_point, "family does not collide at a single point");
    for (int p = 1; p <= tower.p_max; ++p) {
        long pn = 1;
        for (int i = 0; i < tower.nvars; ++i) pn *= p;
        if (reports[p - 1].multiplicity == pn * N) return p;
    }
    return std::nullopt;
}

inline std::optional<int> stabilization_index(const LimitTower& tower, long N,
                                              const MultiplicityPolicy& pol = {}) {
    if (tower.limits.empty()) throw user_error(errc::config_error, "empty tower");
    if (!supported_only_at_origin(tower.limits.front()))
        throw user_error(errc::not_single_point, "family does not collide at a single point");
    return stabilization_index(tower, N, tower_multiplicities(tower, N, pol));
}

}  // namespace limideal
