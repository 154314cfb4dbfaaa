#pragma once

// Colength computations over a prime field, used as the workhorse for large
// truncated or degree-capped staircase counts.  Everything lives inside the
// box of monomials of total degree < B, addressed by mixed-radix index, with
// an O(1) divisor table; normal forms run over a dense accumulator indexed by
// order rank.  Specializing mod q can only enlarge a truncated colength
// (Macaulay ranks drop), so values here are upper bounds for the rational
// ones; equality certificates that survive this one-sidedness are documented
// at the call sites.

#include <algorithm>
#include <cstdint>
#include <queue>
#include <tuple>
#include <unordered_set>
#include <vector>

#include "limideal/poly.hpp"

namespace limideal {

// largest primes below 2^31; trials draw from this table by index
inline constexpr uint64_t kFqPrimes[8] = {2147483647ull, 2147483629ull, 2147483587ull,
                                          2147483579ull, 2147483563ull, 2147483549ull,
                                          2147483543ull, 2147483497ull};

// thrown when a denominator vanishes mod the chosen prime; callers retry
// with the next prime in the table
struct bad_prime {};

struct FqSliceCounts {
    // standard monomials of (input + m^B) per degree 0..B-1
    std::vector<long> per_degree;
    long total() const {
        long s = 0;
        for (long c : per_degree) s += c;
        return s;
    }
    // position of the first empty slice, -1 if none; for homogeneous input
    // a zero slice certifies that every higher slice is zero too
    long first_zero_slice() const {
        for (size_t d = 0; d < per_degree.size(); ++d)
            if (per_degree[d] == 0) return static_cast<long>(d);
        return -1;
    }
    long sum_below(long d) const {
        long s = 0;
        for (long i = 0; i < d && i < static_cast<long>(per_degree.size()); ++i)
            s += per_degree[i];
        return s;
    }
};

namespace fq_detail {

struct Barrett {
    uint64_t P = 0;
    uint64_t M = 0;  // floor(2^64 / P)
    explicit Barrett(uint64_t p) : P(p) {
        M = static_cast<uint64_t>((static_cast<__uint128_t>(1) << 64) / p);
    }
    uint64_t reduce(uint64_t r) const {
        uint64_t q = static_cast<uint64_t>((static_cast<__uint128_t>(r) * M) >> 64);
        r -= q * P;
        if (r >= P) r -= P;
        return r;
    }
    uint64_t mul(uint64_t a, uint64_t b) const { return reduce(a * b); }
    uint64_t sub(uint64_t a, uint64_t b) const { return a >= b ? a - b : a + P - b; }
    uint64_t pow(uint64_t b, uint64_t e) const {
        uint64_t r = 1;
        b = reduce(b);
        while (e) {
            if (e & 1) r = mul(r, b);
            b = mul(b, b);
            e >>= 1;
        }
        return r;
    }
    uint64_t inv(uint64_t a) const { return pow(a, P - 2); }
    uint64_t from_rational(const Rational& r) const {
        Int num = rat_num(r) % Int(P);
        Int den = rat_den(r) % Int(P);
        if (den == 0) throw bad_prime{};
        uint64_t n = static_cast<uint64_t>(num < 0 ? num + Int(P) : num);
        return mul(n, inv(static_cast<uint64_t>(den)));
    }
};

struct BasisElem {
    // terms (rank, coeff) descending by rank, monic, all of degree < B;
    // empty for the boundary monomials of degree exactly B
    std::vector<std::pair<int32_t, uint32_t>> body;
    ExpVec lm;
    bool boundary;  // degree-B monomial generator
    bool is_monomial() const { return boundary || body.size() == 1; }
};

// Buchberger over F_P restricted to total degree < B.  Two modes:
//  - truncated (homogeneous_cap = false): monomials of degree B are adjoined
//    as generators, and every product term of degree >= B is discarded, which
//    is a legal reduction step against them.  Pairs with boundary monomials
//    are processed (their S-polynomials are shifted tails and can have low
//    degree).
//  - capped (homogeneous_cap = true): input must be homogeneous; pairs with
//    lcm degree >= B are skipped, which is sound because such S-polynomials
//    only concern degrees >= B.  No boundary generators are added.
class BoxedModEngine {
  public:
    BoxedModEngine(int nvars, int box_bound, uint64_t prime, bool homogeneous_cap)
        : n_(nvars), B_(box_bound), bar_(prime), capped_(homogeneous_cap) {
        if (n_ < 1 || n_ > 6 || B_ < 2)
            throw internal_error(errc::internal_assertion, "box engine bounds");
        double size = 1;
        for (int i = 0; i < n_; ++i) size *= B_;
        if (size > (1 << 24)) throw internal_error(errc::internal_assertion, "box too large");
        box_size_ = 1;
        strides_.assign(n_, 0);
        for (int i = 0; i < n_; ++i) {
            strides_[i] = box_size_;
            box_size_ *= B_;
        }
        degs_.assign(box_size_, -1);
        rank_.assign(box_size_, -1);
        MonomialOrder ord = MonomialOrder::degrevlex(n_);
        std::vector<int32_t> valid;
        for (int32_t idx = 0; idx < box_size_; ++idx) {
            int d = digit_sum(idx);
            if (d < B_) {
                degs_[idx] = static_cast<int16_t>(d);
                valid.push_back(idx);
            }
        }
        std::sort(valid.begin(), valid.end(), [&](int32_t a, int32_t b) {
            return ord.less(decode(a), decode(b));
        });
        by_rank_ = valid;
        for (size_t r = 0; r < valid.size(); ++r) rank_[valid[r]] = static_cast<int32_t>(r);
        reducer_.assign(box_size_, -1);
        acc_.assign(by_rank_.size(), 0);
        stamp_.assign(by_rank_.size(), 0);
        version_ = 0;
    }

    void add_input(const QPoly& f) {
        if (f.is_zero()) return;
        if (f.vars() != n_)
            throw internal_error(errc::internal_assertion, "box engine variable count");
        if (capped_) {
            if (!f.is_homogeneous())
                throw internal_error(errc::internal_assertion, "capped mode needs homogeneous input");
            if (f.total_degree() >= B_) return;  // entirely above the cap
        }
        std::vector<std::pair<int32_t, uint32_t>> body;
        for (auto& t : f.terms()) {
            if (t.m.deg >= static_cast<uint32_t>(B_)) continue;  // truncated away
            uint32_t c = static_cast<uint32_t>(bar_.from_rational(t.c));
            if (c != 0) body.push_back({rank_[encode(t.m)], c});
        }
        std::sort(body.begin(), body.end(), [](auto& a, auto& b) { return a.first > b.first; });
        pending_.push_back(std::move(body));
    }

    // runs the pair loop to completion and returns per-degree standard
    // monomial counts of the current ideal + m^B; resumable, so more
    // generators can be adjoined afterwards and run() called again
    FqSliceCounts run(long step_budget) {
        if (!capped_ && !boundary_added_) {
            boundary_added_ = true;
            for (auto& m : monomials_of_degree(n_, B_)) {
                BasisElem e;
                e.lm = m;
                e.boundary = true;
                insert_and_pair(std::move(e));
            }
        }
        for (auto& body : pending_) {
            if (body.empty()) continue;
            begin_acc();
            load(body, 1, 0, 0, false);
            auto nf = extract_normal_form();
            if (!nf.empty()) insert_poly(std::move(nf));
        }
        pending_.clear();

        long reductions = 0;
        while (!queue_.empty()) {
            auto [deg, s, i, j] = queue_.top();
            queue_.pop();
            (void)deg;
            (void)s;
            done_.insert(key(i, j));
            if (coprime(G_[i].lm, G_[j].lm)) continue;
            bool exempt = !capped_ && (G_[i].is_monomial() || G_[j].is_monomial());
            if (!exempt) {
                ExpVec l = lcm(G_[i].lm, G_[j].lm);
                bool skip = false;
                for (uint32_t k = 0; k < G_.size() && !skip; ++k) {
                    if (k == i || k == j || !divides(G_[k].lm, l)) continue;
                    if (done_.count(key(std::min(i, k), std::max(i, k))) &&
                        done_.count(key(std::min(j, k), std::max(j, k))))
                        skip = true;
                }
                if (skip) continue;
            }
            if (++reductions > step_budget)
                throw user_error(errc::step_budget_exceeded,
                                 "modular staircase computation exceeded the step budget of " +
                                     std::to_string(step_budget));
            load_s_poly(i, j);
            auto nf = extract_normal_form();
            if (nf.empty()) continue;
            insert_poly(std::move(nf));
        }
        return counts();
    }

    // adjoins every monomial of total degree d (d < B) as a new generator;
    // with d = B-1 this turns a finished bound-B state into the bound-(B-1)
    // state without recomputing the basis from scratch
    void augment_monomials(int d) {
        if (d < 0 || d >= B_)
            throw internal_error(errc::internal_assertion, "augment degree out of box");
        for (auto& m : monomials_of_degree(n_, d))
            pending_.push_back({{rank_[encode(m)], 1u}});
    }

    FqSliceCounts counts() const {
        FqSliceCounts out;
        out.per_degree.assign(B_, 0);
        for (int32_t idx : by_rank_)
            if (reducer_[idx] < 0) out.per_degree[degs_[idx]]++;
        return out;
    }

  private:
    int n_, B_;
    Barrett bar_;
    bool capped_;
    int32_t box_size_ = 0;
    std::vector<int32_t> strides_;
    std::vector<int16_t> degs_;     // -1 for out-of-box lattice points
    std::vector<int32_t> rank_;     // degrevlex rank among in-box monomials
    std::vector<int32_t> by_rank_;  // inverse of rank_
    std::vector<int32_t> reducer_;  // some basis index whose lm divides, else -1
    std::vector<std::vector<std::pair<int32_t, uint32_t>>> pending_;

    // persistent pair-loop state so runs can resume after augmentation
    std::vector<BasisElem> G_;
    using Entry = std::tuple<uint32_t, uint64_t, uint32_t, uint32_t>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue_;
    std::unordered_set<uint64_t> done_;
    uint64_t seq_ = 0;
    bool boundary_added_ = false;

    static uint64_t key(uint32_t i, uint32_t j) { return (static_cast<uint64_t>(i) << 32) | j; }

    // A pair with a boundary monomial b only matters when lt(g) divides b: its
    // S-polynomial is then the truncation of the minimal shift of g whose head
    // degree reaches B.  Every larger dying shift is a monomial multiple of a
    // minimal one (truncation commutes with further shifting, since dropped
    // terms only gain degree), so its S-polynomial has a standard
    // representation once the minimal ones are processed.
    void push_pair(uint32_t i, uint32_t j) {
        const BasisElem& a = G_[i];
        const BasisElem& b = G_[j];
        if (a.is_monomial() && b.is_monomial()) return;
        if (a.boundary && !divides(b.lm, a.lm)) return;
        if (b.boundary && !divides(a.lm, b.lm)) return;
        uint32_t d = lcm(a.lm, b.lm).deg;
        if (capped_ && d >= static_cast<uint32_t>(B_)) return;
        queue_.emplace(d, seq_++, i, j);
    }
    void insert_and_pair(BasisElem e) {
        auto t = static_cast<uint32_t>(G_.size());
        insert(std::move(e));
        for (uint32_t p = 0; p < t; ++p) push_pair(p, t);
    }

    // dense working polynomial: acc_ holds coefficients by rank, valid where
    // stamp_ matches the current version; top_ bounds the leading rank
    std::vector<uint32_t> acc_;
    std::vector<uint32_t> stamp_;
    uint32_t version_;
    int32_t top_ = -1;

    int digit_sum(int32_t idx) const {
        int s = 0;
        for (int i = 0; i < n_; ++i) {
            s += idx % B_;
            idx /= B_;
        }
        return s;
    }
    int32_t encode(const ExpVec& e) const {
        int32_t idx = 0;
        for (int i = 0; i < n_; ++i) idx += static_cast<int32_t>(e[i]) * strides_[i];
        return idx;
    }
    ExpVec decode(int32_t idx) const {
        ExpVec e(n_);
        for (int i = 0; i < n_; ++i) {
            e.set(i, idx % B_);
            idx /= B_;
        }
        return e;
    }

    void begin_acc() {
        ++version_;
        top_ = -1;
    }
    void bump(int32_t r, uint64_t delta) {  // acc[r] += delta (mod P)
        uint64_t cur = stamp_[r] == version_ ? acc_[r] : 0;
        stamp_[r] = version_;
        cur += delta;
        if (cur >= bar_.P) cur -= bar_.P;
        acc_[r] = static_cast<uint32_t>(cur);
        if (r > top_) top_ = r;
    }

    // adds c * shift(body) into the accumulator, skipping truncated terms;
    // negate flips the sign
    void load(const std::vector<std::pair<int32_t, uint32_t>>& body, uint64_t c,
              int32_t shift_off, int shift_deg, bool negate) {
        for (auto& t : body) {
            int32_t src = by_rank_[t.first];
            if (degs_[src] + shift_deg >= B_) continue;
            uint64_t cc = bar_.mul(t.second, c);
            if (!cc) continue;
            if (negate) cc = bar_.P - cc;
            bump(rank_[src + shift_off], cc);
        }
    }

    // difference of the two cofactor multiples; the common leading term lcm
    // cancels symbolically (it may lie outside the box for boundary pairs)
    void load_s_poly(uint32_t i, uint32_t j) {
        begin_acc();
        ExpVec l = lcm(G_[i].lm, G_[j].lm);
        auto side = [&](const BasisElem& g, bool negate) {
            if (g.boundary || g.body.size() < 2) return;
            ExpVec q = quotient(l, g.lm);
            std::vector<std::pair<int32_t, uint32_t>> tail(g.body.begin() + 1, g.body.end());
            load(tail, 1, encode(q), static_cast<int>(q.deg), negate);
        };
        side(G_[i], false);
        side(G_[j], true);
    }

    // reduces the accumulator against the basis and returns the (descending,
    // not yet monic) sparse normal form
    std::vector<std::pair<int32_t, uint32_t>> extract_normal_form() {
        std::vector<std::pair<int32_t, uint32_t>> out;
        for (int32_t r = top_; r >= 0; --r) {
            if (stamp_[r] != version_ || acc_[r] == 0) continue;
            int32_t idx = by_rank_[r];
            int32_t red = reducer_[idx];
            if (red < 0) {
                out.push_back({r, acc_[r]});
                continue;
            }
            const BasisElem& g = G_[red];
            if (g.is_monomial()) continue;  // reduction simply deletes the term
            uint64_t c = bar_.P - acc_[r];  // subtract c' * shifted body, lead cancels
            ExpVec q = quotient(decode(idx), g.lm);
            load(g.body, c, encode(q), static_cast<int>(q.deg), false);
            // the lead cancelled: acc_[r] + (P - acc_[r]) = 0 mod P
        }
        return out;
    }

    void insert_poly(std::vector<std::pair<int32_t, uint32_t>> body) {
        uint64_t s = bar_.inv(body.front().second);
        for (auto& t : body) t.second = static_cast<uint32_t>(bar_.mul(t.second, s));
        BasisElem e;
        e.body = std::move(body);
        e.lm = decode(by_rank_[e.body.front().first]);
        e.boundary = false;
        insert_and_pair(std::move(e));
    }

    // marks multiples of e.lm in the divisor table; monomial reducers
    // overwrite polynomial ones because reducing by them is a plain deletion
    void insert(BasisElem e) {
        auto idx = static_cast<int32_t>(G_.size());
        bool mono = e.is_monomial();
        if (!e.boundary) {
            int32_t base = encode(e.lm);
            int room = B_ - 1 - static_cast<int>(e.lm.deg);
            mark(base, 0, room, idx, mono);
        }
        G_.push_back(std::move(e));
    }
    void mark(int32_t at, int var, int room, int32_t idx, bool mono) {
        if (var == n_) {
            if (reducer_[at] < 0 || mono) reducer_[at] = idx;
            return;
        }
        for (int k = 0; k <= room; ++k) mark(at + k * strides_[var], var + 1, room - k, idx, mono);
    }
};

}  // namespace fq_detail

struct FqOptions {
    long step_budget = 2000000;
    int prime_index = 0;
};

// standard monomial slice counts of (gens + m^B) over F_P; truncated mode
inline FqSliceCounts fq_truncated_slices(const std::vector<QPoly>& gens, int nvars, int B,
                                         const FqOptions& opt = {}) {
    fq_detail::BoxedModEngine eng(nvars, B, kFqPrimes[opt.prime_index % 8], false);
    for (auto& g : gens) eng.add_input(g);
    return eng.run(opt.step_budget);
}

// slice counts below the cap for homogeneous input; a zero slice certifies
// that the ideal is m-primary with everything above the slice zero as well
inline FqSliceCounts fq_capped_slices(const std::vector<QPoly>& gens, int nvars, int cap,
                                      const FqOptions& opt = {}) {
    fq_detail::BoxedModEngine eng(nvars, cap, kFqPrimes[opt.prime_index % 8], true);
    for (auto& g : gens) eng.add_input(g);
    return eng.run(opt.step_budget);
}

struct FqColength {
    long value = -1;
    bool certified = false;
    long box_bound = -1;  // the bound that produced the accepted value
    uint64_t prime = 0;
};

// colength at the origin of an ideal that is zero-dimensional at 0: computes
// l(J + m^D) at D and D+1 and accepts on equality (Nakayama: equality forces
// m^D into J locally, so the common value is l_0(J)).  Retries with larger D
// up to max_bound; the value is an upper bound for the rational colength,
// exact outside a measure-zero set of primes.
// Walk the box bound upward until two consecutive truncated colengths agree;
// by Nakayama the first plateau is the local colength at the origin, so a low
// start_bound is safe and much cheaper than starting near the Bezout degree.
// Each truncated value is a lower bound for the local colength, so when
// stop_above >= 0 the walk aborts as soon as a value exceeds it (the caller
// knows the final value could only be larger still).
inline FqColength fq_local_colength(const std::vector<QPoly>& gens, int nvars, int start_bound,
                                    int max_bound, const FqOptions& opt = {},
                                    long stop_above = -1) {
    FqColength out;
    out.prime = kFqPrimes[opt.prime_index % 8];
    int D = std::max(start_bound, 2);
    long prev = -1;
    int prev_D = -1;
    while (D <= max_bound) {
        long v = fq_truncated_slices(gens, nvars, D, opt).total();
        if (prev >= 0 && prev_D == D - 1 && v == prev) {
            out.value = v;
            out.certified = true;
            out.box_bound = D;
            return out;
        }
        if (stop_above >= 0 && v > stop_above) {
            out.value = v;
            out.box_bound = D;
            return out;
        }
        prev = v;
        prev_D = D;
        D += 1;
    }
    out.value = prev;
    out.box_bound = prev_D;
    return out;
}

// Local colength with the comparison run amortized: one full truncated run at
// a guessed bound H, then the degree-(H-1) monomials are adjoined to the warm
// engine, which turns its state into the bound-(H-1) one for a fraction of a
// full run.  Agreement of the two totals certifies (Nakayama, as above); if
// the totals still differ the guess was at or below the plateau start and the
// driver restarts higher.  stop_above aborts as soon as a total (a lower
// bound for the answer) exceeds it.
inline FqColength fq_local_colength_down(const std::vector<QPoly>& gens, int nvars, int d_hint,
                                         int max_bound, const FqOptions& opt = {},
                                         long stop_above = -1) {
    FqColength out;
    out.prime = kFqPrimes[opt.prime_index % 8];
    int H = std::min(std::max(d_hint, 4), max_bound);
    for (;;) {
        fq_detail::BoxedModEngine eng(nvars, H, out.prime, false);
        for (auto& g : gens) eng.add_input(g);
        long hi = eng.run(opt.step_budget).total();
        out.value = hi;
        out.box_bound = H;
        if (stop_above >= 0 && hi > stop_above) return out;
        eng.augment_monomials(H - 1);
        long lo = eng.run(opt.step_budget).sum_below(H - 1);
        if (lo == hi) {
            out.certified = true;
            // keep augmenting down to report the true plateau start, which
            // makes the caller's next hint tight; each layer is cheap
            int d = H - 2;
            while (d >= 2) {
                eng.augment_monomials(d);
                if (eng.run(opt.step_budget).sum_below(d) < hi) break;
                --d;
            }
            out.box_bound = d + 1;
            return out;
        }
        if (H >= max_bound) return out;
        H = std::min(max_bound, H + 4);
    }
}

}  // namespace limideal
