#pragma once

// Exponent vectors with inline storage and runtime monomial orders.
// An ExpVec always carries its variable count; mixing counts is a logic error
// and asserted in debug ops.

#include <cstdint>
#include <string>
#include <vector>

#include "limideal/errors.hpp"

namespace limideal {

struct ExpVec {
    static constexpr int max_vars = 12;

    ExpVec() = default;
    explicit ExpVec(int nvars) : n(static_cast<uint8_t>(nvars)) {
        if (nvars < 0 || nvars > max_vars)
            throw internal_error(errc::internal_assertion, "variable count out of range");
        for (int i = 0; i < max_vars; ++i) e[i] = 0;
    }
    ExpVec(std::initializer_list<int> xs) : ExpVec(static_cast<int>(xs.size())) {
        int i = 0;
        for (int x : xs) e[i++] = static_cast<uint16_t>(x);
        recompute();
    }
    static ExpVec unit(int nvars, int i, int power = 1) {
        ExpVec v(nvars);
        v.e[i] = static_cast<uint16_t>(power);
        v.deg = static_cast<uint32_t>(power);
        return v;
    }

    uint16_t e[max_vars] = {};
    uint8_t n = 0;
    uint32_t deg = 0;  // cached total degree

    int vars() const { return n; }
    uint16_t operator[](int i) const { return e[i]; }
    void set(int i, int v) {
        deg += static_cast<uint32_t>(v) - e[i];
        e[i] = static_cast<uint16_t>(v);
    }
    void recompute() {
        deg = 0;
        for (int i = 0; i < n; ++i) deg += e[i];
    }
    bool is_one() const { return deg == 0; }

    friend ExpVec operator*(const ExpVec& a, const ExpVec& b) {
        ExpVec r(a.n);
        for (int i = 0; i < a.n; ++i) r.e[i] = static_cast<uint16_t>(a.e[i] + b.e[i]);
        r.deg = a.deg + b.deg;
        return r;
    }
    // componentwise a <= b
    friend bool divides(const ExpVec& a, const ExpVec& b) {
        if (a.deg > b.deg) return false;
        for (int i = 0; i < a.n; ++i)
            if (a.e[i] > b.e[i]) return false;
        return true;
    }
    // b / a, requires divides(a, b)
    friend ExpVec quotient(const ExpVec& b, const ExpVec& a) {
        ExpVec r(b.n);
        for (int i = 0; i < b.n; ++i) r.e[i] = static_cast<uint16_t>(b.e[i] - a.e[i]);
        r.deg = b.deg - a.deg;
        return r;
    }
    friend ExpVec lcm(const ExpVec& a, const ExpVec& b) {
        ExpVec r(a.n);
        for (int i = 0; i < a.n; ++i) {
            r.e[i] = a.e[i] > b.e[i] ? a.e[i] : b.e[i];
            r.deg += r.e[i];
        }
        return r;
    }
    friend bool coprime(const ExpVec& a, const ExpVec& b) {
        for (int i = 0; i < a.n; ++i)
            if (a.e[i] && b.e[i]) return false;
        return true;
    }
    friend bool operator==(const ExpVec& a, const ExpVec& b) {
        if (a.n != b.n || a.deg != b.deg) return false;
        for (int i = 0; i < a.n; ++i)
            if (a.e[i] != b.e[i]) return false;
        return true;
    }
    friend bool operator!=(const ExpVec& a, const ExpVec& b) { return !(a == b); }

    // append a fresh variable (exponent 0) at the back, or prepend at the front
    ExpVec widened_back() const {
        ExpVec r = *this;
        r.n = static_cast<uint8_t>(n + 1);
        r.e[n] = 0;
        return r;
    }
    ExpVec widened_front() const {
        ExpVec r(n + 1);
        for (int i = 0; i < n; ++i) r.e[i + 1] = e[i];
        r.deg = deg;
        return r;
    }
    // drop the back / front variable; exponent there must be handled by caller
    ExpVec narrowed_back() const {
        ExpVec r = *this;
        r.n = static_cast<uint8_t>(n - 1);
        r.deg -= r.e[n - 1];
        r.e[n - 1] = 0;
        return r;
    }
    ExpVec narrowed_front() const {
        ExpVec r(n - 1);
        for (int i = 1; i < n; ++i) r.e[i - 1] = e[i];
        r.recompute();
        return r;
    }
};

// all monomials of total degree exactly d in nvars variables
inline std::vector<ExpVec> monomials_of_degree(int nvars, int d) {
    std::vector<ExpVec> out;
    if (nvars == 0) {
        if (d == 0) out.push_back(ExpVec(0));
        return out;
    }
    ExpVec cur(nvars);
    auto rec = [&](auto&& self, int var, int remaining) -> void {
        if (var == nvars - 1) {
            cur.set(var, remaining);
            out.push_back(cur);
            cur.set(var, 0);
            return;
        }
        for (int k = remaining; k >= 0; --k) {
            cur.set(var, k);
            self(self, var + 1, remaining - k);
        }
        cur.set(var, 0);
    };
    rec(rec, 0, d);
    return out;
}

enum class OrderKind { lex, degrevlex, elim_block, weighted_degrevlex };

// A total order on monomials in a fixed number of variables.  cmp(a, b) > 0
// means a is larger (comes first in a polynomial).  All kinds here are
// well-orders: weights are positive and every variable exceeds 1.
class MonomialOrder {
  public:
    static MonomialOrder lex(int nvars) { return {OrderKind::lex, nvars, 0, {}}; }
    static MonomialOrder degrevlex(int nvars) { return {OrderKind::degrevlex, nvars, 0, {}}; }
    // first `block` variables are compared (degrevlex) before the rest
    static MonomialOrder elim_block(int nvars, int block) {
        if (block <= 0 || block >= nvars)
            throw internal_error(errc::internal_assertion, "bad elimination block size");
        return {OrderKind::elim_block, nvars, block, {}};
    }
    static MonomialOrder weighted_degrevlex(std::vector<long> weights) {
        for (long w : weights)
            if (w <= 0) throw user_error(errc::config_error, "order weights must be positive");
        int nv = static_cast<int>(weights.size());
        return {OrderKind::weighted_degrevlex, nv, 0, std::move(weights)};
    }

    OrderKind kind() const { return kind_; }
    int vars() const { return nvars_; }
    int block() const { return block_; }
    const std::vector<long>& weights() const { return w_; }

    int cmp(const ExpVec& a, const ExpVec& b) const {
        switch (kind_) {
            case OrderKind::lex:
                return cmp_lex(a, b, 0, nvars_);
            case OrderKind::degrevlex:
                return cmp_drl(a, b, 0, nvars_);
            case OrderKind::elim_block: {
                int c = cmp_drl(a, b, 0, block_);
                return c ? c : cmp_drl(a, b, block_, nvars_);
            }
            case OrderKind::weighted_degrevlex: {
                long long da = 0, db = 0;
                for (int i = 0; i < nvars_; ++i) {
                    da += static_cast<long long>(a.e[i]) * w_[i];
                    db += static_cast<long long>(b.e[i]) * w_[i];
                }
                if (da != db) return da > db ? 1 : -1;
                return revlex_tie(a, b, 0, nvars_);
            }
        }
        return 0;
    }
    bool less(const ExpVec& a, const ExpVec& b) const { return cmp(a, b) < 0; }
    bool greater(const ExpVec& a, const ExpVec& b) const { return cmp(a, b) > 0; }

    friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
        return a.kind_ == b.kind_ && a.nvars_ == b.nvars_ && a.block_ == b.block_ && a.w_ == b.w_;
    }

  private:
    MonomialOrder(OrderKind k, int nv, int blk, std::vector<long> w)
        : kind_(k), nvars_(nv), block_(blk), w_(std::move(w)) {}

    static int cmp_lex(const ExpVec& a, const ExpVec& b, int lo, int hi) {
        for (int i = lo; i < hi; ++i)
            if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? 1 : -1;
        return 0;
    }
    static int cmp_drl(const ExpVec& a, const ExpVec& b, int lo, int hi) {
        unsigned da = 0, db = 0;
        for (int i = lo; i < hi; ++i) {
            da += a.e[i];
            db += b.e[i];
        }
        if (da != db) return da > db ? 1 : -1;
        return revlex_tie(a, b, lo, hi);
    }
    // reverse lexicographic: scan from the last variable; the monomial with the
    // smaller exponent at the first difference is the larger one
    static int revlex_tie(const ExpVec& a, const ExpVec& b, int lo, int hi) {
        for (int i = hi - 1; i >= lo; --i)
            if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
        return 0;
    }

    OrderKind kind_;
    int nvars_;
    int block_;
    std::vector<long> w_;
};

}  // namespace limideal
