/* Copyright (C) 2026 the padic-sendov developers.
 * This program is Licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#ifndef SENDOV_SCALAR_HPP
#define SENDOV_SCALAR_HPP

#include <utility>
#include <vector>

#include "sendov/context.hpp"
#include "sendov/error.hpp"
#include "sendov/rational.hpp"
#include "sendov/valuation.hpp"

namespace sendov {

namespace detail {

// Dense polynomials over Q, coefficient i belongs to x^i, trailing zeros
// trimmed.  Only the few operations the scalar field and the cyclotomic
// recurrence need.
using RatVec = std::vector<Rat>;

inline void rv_trim(RatVec& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline int rv_deg(const RatVec& a) { return static_cast<int>(a.size()) - 1; }

inline RatVec rv_mul(const RatVec& a, const RatVec& b) {
    if (a.empty() || b.empty()) return {};
    RatVec out(a.size() + b.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] += a[i] * b[j];
    }
    rv_trim(out);
    return out;
}

inline RatVec rv_sub(const RatVec& a, const RatVec& b) {
    RatVec out(std::max(a.size(), b.size()), Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
    rv_trim(out);
    return out;
}

// Long division over Q; divisor nonzero.
inline std::pair<RatVec, RatVec> rv_divmod(RatVec num, const RatVec& den) {
    if (den.empty()) throw DivisionByZero("rational polynomial division by zero");
    if (num.size() < den.size()) return {RatVec{}, std::move(num)};
    RatVec q(num.size() - den.size() + 1, Rat(0));
    const Rat inv_lc = Rat(1) / den.back();
    for (std::size_t k = q.size(); k-- > 0;) {
        Rat c = num[k + den.size() - 1] * inv_lc;
        if (c == 0) continue;
        q[k] = c;
        for (std::size_t i = 0; i < den.size(); ++i)
            num[k + i] -= c * den[i];
    }
    rv_trim(num);
    return {std::move(q), std::move(num)};
}

inline RatVec rv_div_exact(RatVec num, const RatVec& den) {
    auto [q, r] = rv_divmod(std::move(num), den);
    if (!r.empty()) throw InternalError("rational polynomial division was not exact");
    return q;
}

} // namespace detail

/*
 * An element of E = Q(p^{1/b}), stored as exact rational coordinates
 * (c_0, ..., c_{b-1}) in the power basis of pi = p^{1/b}:
 *
 *     x = sum_i c_i pi^i,      pi^b = p.
 *
 * The valuation is exact without any root-finding: the nonzero terms
 * c_i pi^i have valuations v_p(c_i) + i/b, which are pairwise distinct
 * modulo 1, so the ultrametric gives v(x) = min_i (v_p(c_i) + i/b).
 */
class ExtScalar {
public:
    ExtScalar(const PadicContext& ctx, std::vector<Rat> coords)
        : ctx_(ctx), c_(std::move(coords)) {
        reduce_and_resize();
    }

    static ExtScalar zero(const PadicContext& ctx) { return ExtScalar(ctx, {}); }
    static ExtScalar one(const PadicContext& ctx) { return from_rational(ctx, Rat(1)); }

    static ExtScalar from_rational(const PadicContext& ctx, const Rat& q) {
        return ExtScalar(ctx, {q});
    }
    static ExtScalar from_integer(const PadicContext& ctx, long long n) {
        return ExtScalar(ctx, {Rat(n)});
    }

    // The uniformizer pi = p^{1/b}.  For b = 1 this is p itself.
    static ExtScalar pi(const PadicContext& ctx) {
        if (ctx.ram() == 1) return from_integer(ctx, ctx.prime());
        std::vector<Rat> c(2, Rat(0));
        c[1] = 1;
        return ExtScalar(ctx, std::move(c));
    }

    const PadicContext& context() const { return ctx_; }
    const std::vector<Rat>& coords() const { return c_; }
    const Rat& coord(int i) const { return c_.at(static_cast<std::size_t>(i)); }

    bool is_zero() const {
        for (const Rat& q : c_)
            if (q != 0) return false;
        return true;
    }
    bool is_one() const {
        if (c_[0] != 1) return false;
        for (std::size_t i = 1; i < c_.size(); ++i)
            if (c_[i] != 0) return false;
        return true;
    }

    friend bool operator==(const ExtScalar& a, const ExtScalar& b) {
        require_same_context(a.ctx_, b.ctx_, "scalar comparison");
        return a.c_ == b.c_;
    }
    friend bool operator!=(const ExtScalar& a, const ExtScalar& b) { return !(a == b); }

    friend ExtScalar operator+(const ExtScalar& a, const ExtScalar& b) {
        require_same_context(a.ctx_, b.ctx_, "scalar addition");
        std::vector<Rat> c(a.c_);
        for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.c_[i];
        return ExtScalar(a.ctx_, std::move(c));
    }
    friend ExtScalar operator-(const ExtScalar& a, const ExtScalar& b) {
        require_same_context(a.ctx_, b.ctx_, "scalar subtraction");
        std::vector<Rat> c(a.c_);
        for (std::size_t i = 0; i < c.size(); ++i) c[i] -= b.c_[i];
        return ExtScalar(a.ctx_, std::move(c));
    }
    ExtScalar operator-() const {
        std::vector<Rat> c(c_);
        for (Rat& q : c) q = -q;
        return ExtScalar(ctx_, std::move(c));
    }

    friend ExtScalar operator*(const ExtScalar& a, const ExtScalar& b) {
        require_same_context(a.ctx_, b.ctx_, "scalar multiplication");
        const std::size_t nb = a.c_.size();
        std::vector<Rat> prod(2 * nb - 1, Rat(0));
        for (std::size_t i = 0; i < nb; ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < nb; ++j)
                prod[i + j] += a.c_[i] * b.c_[j];
        }
        return ExtScalar(a.ctx_, std::move(prod));  // constructor folds pi^b -> p
    }

    // Multiplication by a rational constant: coordinate-wise.
    ExtScalar scale(const Rat& q) const {
        std::vector<Rat> c(c_);
        for (Rat& x : c) x *= q;
        return ExtScalar(ctx_, std::move(c));
    }

    ExtScalar inverse() const {
        if (is_zero()) throw DivisionByZero("inverse of the zero scalar");
        // Fast path: purely rational elements.
        bool only_c0 = true;
        for (std::size_t i = 1; i < c_.size(); ++i)
            if (c_[i] != 0) { only_c0 = false; break; }
        if (only_c0) {
            std::vector<Rat> c(c_.size(), Rat(0));
            c[0] = Rat(1) / c_[0];
            return ExtScalar(ctx_, std::move(c));
        }
        // Extended Euclid against the minimal polynomial x^b - p; it is
        // Eisenstein-irreducible, so the gcd is a nonzero constant.
        detail::RatVec m(static_cast<std::size_t>(ctx_.ram()) + 1, Rat(0));
        m[0] = Rat(-ctx_.prime());
        m.back() = 1;
        detail::RatVec r0 = m, r1 = c_;
        detail::rv_trim(r1);
        detail::RatVec s0{}, s1{Rat(1)};
        while (!r1.empty()) {
            auto [q, r2] = detail::rv_divmod(r0, r1);
            detail::RatVec s2 = detail::rv_sub(s0, detail::rv_mul(q, s1));
            r0 = std::move(r1);
            r1 = std::move(r2);
            s0 = std::move(s1);
            s1 = std::move(s2);
        }
        if (detail::rv_deg(r0) != 0)
            throw InternalError("x^b - p cannot share a factor with a smaller-degree element");
        const Rat inv_g = Rat(1) / r0[0];
        for (Rat& q : s0) q *= inv_g;
        return ExtScalar(ctx_, std::move(s0));
    }

    friend ExtScalar operator/(const ExtScalar& a, const ExtScalar& b) {
        return a * b.inverse();
    }

    // x^e for e >= 0 by repeated squaring; negative e inverts first.
    ExtScalar pow(long long e) const {
        if (e < 0) return inverse().pow(-e);
        ExtScalar base = *this;
        ExtScalar acc = one(ctx_);
        while (e > 0) {
            if (e & 1) acc = acc * base;
            base = base * base;
            e >>= 1;
        }
        return acc;
    }

    // v(x) = min over nonzero coordinates of v_p(c_i) + i/b; +inf iff x = 0.
    ValuationQ valuation() const {
        bool any = false;
        Rat best;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            Rat v = Rat(rat_padic_valuation(c_[i], ctx_.prime())) +
                    Rat(static_cast<long long>(i), ctx_.ram());
            if (!any || v < best) {
                best = v;
                any = true;
            }
        }
        return any ? ValuationQ(best) : ValuationQ::infinite();
    }

    // Reduction modulo the maximal ideal, as an element of F_p in [0, p).
    // Defined only on the valuation ring (v >= 0); there the terms c_i pi^i
    // with i >= 1 all lie in the maximal ideal, so the residue is c_0 mod p.
    long long residue() const {
        if (valuation() < ValuationQ(0))
            throw NegativeValuation("residue of an element with negative valuation");
        const long long p = ctx_.prime();
        const Rat& c0 = c_[0];
        long long n = mod_p(rat_num(c0), p);
        long long d = mod_p(rat_den(c0), p);
        return n * mod_inverse(d, p) % p;
    }

private:
    // Fold pi^k for k >= b down via pi^b = p, then fix the length at b.
    void reduce_and_resize() {
        const std::size_t nb = static_cast<std::size_t>(ctx_.ram());
        for (std::size_t k = c_.size(); k-- > nb;) {
            if (c_[k] != 0) c_[k - nb] += c_[k] * ctx_.prime();
            c_[k] = 0;
        }
        c_.resize(nb, Rat(0));
    }

    PadicContext ctx_;
    std::vector<Rat> c_;
};

} // namespace sendov

#endif
