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
#ifndef SENDOV_POLY_HPP
#define SENDOV_POLY_HPP

#include <utility>
#include <vector>

#include "sendov/context.hpp"
#include "sendov/error.hpp"
#include "sendov/scalar.hpp"

namespace sendov {

/*
 * Dense univariate polynomial over E = Q(p^{1/b}).  Coefficient i belongs
 * to z^i; trailing zeros are trimmed, the zero polynomial has an empty
 * coefficient vector and degree -1.
 */
class UPoly {
public:
    explicit UPoly(const PadicContext& ctx) : ctx_(ctx) {}

    UPoly(const PadicContext& ctx, std::vector<ExtScalar> coeffs)
        : ctx_(ctx), c_(std::move(coeffs)) {
        for (const ExtScalar& x : c_)
            require_same_context(ctx_, x.context(), "polynomial construction");
        trim();
    }

    static UPoly from_rationals(const PadicContext& ctx, const std::vector<Rat>& qs) {
        std::vector<ExtScalar> c;
        c.reserve(qs.size());
        for (const Rat& q : qs) c.push_back(ExtScalar::from_rational(ctx, q));
        return UPoly(ctx, std::move(c));
    }

    // c * z^k
    static UPoly monomial(const PadicContext& ctx, int k, const ExtScalar& c) {
        std::vector<ExtScalar> v(static_cast<std::size_t>(k) + 1, ExtScalar::zero(ctx));
        v.back() = c;
        return UPoly(ctx, std::move(v));
    }
    static UPoly monomial(const PadicContext& ctx, int k) {
        return monomial(ctx, k, ExtScalar::one(ctx));
    }

    const PadicContext& context() const { return ctx_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }

    // Coefficient of z^i; zero beyond the degree.
    ExtScalar coeff(int i) const {
        if (i < 0 || static_cast<std::size_t>(i) >= c_.size())
            return ExtScalar::zero(ctx_);
        return c_[static_cast<std::size_t>(i)];
    }
    const ExtScalar& leading() const {
        if (c_.empty()) throw ZeroPolynomial("leading coefficient of the zero polynomial");
        return c_.back();
    }
    bool is_monic() const { return !c_.empty() && c_.back().is_one(); }

    friend bool operator==(const UPoly& a, const UPoly& b) {
        require_same_context(a.ctx_, b.ctx_, "polynomial comparison");
        if (a.c_.size() != b.c_.size()) return false;
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            if (a.c_[i] != b.c_[i]) return false;
        return true;
    }
    friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

    friend UPoly operator+(const UPoly& a, const UPoly& b) {
        require_same_context(a.ctx_, b.ctx_, "polynomial addition");
        std::vector<ExtScalar> c(std::max(a.c_.size(), b.c_.size()),
                                 ExtScalar::zero(a.ctx_));
        for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] = a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] = c[i] + b.c_[i];
        return UPoly(a.ctx_, std::move(c));
    }
    friend UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }
    UPoly operator-() const {
        std::vector<ExtScalar> c(c_);
        for (ExtScalar& x : c) x = -x;
        return UPoly(ctx_, std::move(c));
    }

    friend UPoly operator*(const UPoly& a, const UPoly& b) {
        require_same_context(a.ctx_, b.ctx_, "polynomial multiplication");
        if (a.is_zero() || b.is_zero()) return UPoly(a.ctx_);
        std::vector<ExtScalar> c(a.c_.size() + b.c_.size() - 1, ExtScalar::zero(a.ctx_));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
        }
        return UPoly(a.ctx_, std::move(c));
    }
    friend UPoly operator*(const UPoly& a, const ExtScalar& s) {
        std::vector<ExtScalar> c(a.c_);
        for (ExtScalar& x : c) x = x * s;
        return UPoly(a.ctx_, std::move(c));
    }

    ExtScalar eval(const ExtScalar& x) const {
        require_same_context(ctx_, x.context(), "polynomial evaluation");
        ExtScalar acc = ExtScalar::zero(ctx_);
        for (std::size_t i = c_.size(); i-- > 0;)
            acc = acc * x + c_[i];
        return acc;
    }

    // Formal derivative.  The base has characteristic 0, so the degree
    // drops by exactly one (even when v(deg) > 0).
    UPoly derivative() const {
        if (c_.size() <= 1) return UPoly(ctx_);
        std::vector<ExtScalar> c;
        c.reserve(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i)
            c.push_back(c_[i].scale(Rat(static_cast<long long>(i))));
        return UPoly(ctx_, std::move(c));
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    PadicContext ctx_;
    std::vector<ExtScalar> c_;
};

// z - root
inline UPoly monic_linear(const PadicContext& ctx, const ExtScalar& root) {
    std::vector<ExtScalar> c{-root, ExtScalar::one(ctx)};
    return UPoly(ctx, std::move(c));
}

// Long division over the field E; divisor nonzero.
inline std::pair<UPoly, UPoly> divmod(const UPoly& num, const UPoly& den) {
    require_same_context(num.context(), den.context(), "polynomial division");
    if (den.is_zero()) throw DivisionByZero("polynomial division by zero");
    const PadicContext& ctx = num.context();
    if (num.degree() < den.degree()) return {UPoly(ctx), num};
    const int dq = num.degree() - den.degree();
    std::vector<ExtScalar> rem;
    rem.reserve(static_cast<std::size_t>(num.degree()) + 1);
    for (int i = 0; i <= num.degree(); ++i) rem.push_back(num.coeff(i));
    std::vector<ExtScalar> quot(static_cast<std::size_t>(dq) + 1, ExtScalar::zero(ctx));
    const ExtScalar inv_lc = den.leading().inverse();
    for (int k = dq; k >= 0; --k) {
        ExtScalar c = rem[static_cast<std::size_t>(k + den.degree())] * inv_lc;
        if (c.is_zero()) continue;
        quot[static_cast<std::size_t>(k)] = c;
        for (int i = 0; i <= den.degree(); ++i) {
            auto idx = static_cast<std::size_t>(k + i);
            rem[idx] = rem[idx] - c * den.coeff(i);
        }
    }
    return {UPoly(ctx, std::move(quot)), UPoly(ctx, std::move(rem))};
}

// g(y) = f(c + y), by repeated synthetic division by (z - c).  Exact.
inline UPoly taylor_shift(const UPoly& f, const ExtScalar& c) {
    require_same_context(f.context(), c.context(), "taylor shift");
    if (f.is_zero()) return f;
    const int n = f.degree();
    std::vector<ExtScalar> work;
    work.reserve(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) work.push_back(f.coeff(i));
    std::vector<ExtScalar> out;
    out.reserve(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
        // divide `work` by (z - c); remainder is the next output coefficient
        for (std::size_t i = work.size() - 1; i-- > 0;)
            work[i] = work[i] + c * work[i + 1];
        out.push_back(work.front());
        work.erase(work.begin());
    }
    return UPoly(f.context(), std::move(out));
}

/*
 * Res_z(h, g) with the convention
 *
 *     Res(h, g) = lc(h)^{deg g} * prod over roots a of h of g(a),
 *
 * which coincides with the Sylvester determinant.  Computed by the
 * Euclidean remainder chain over E, using
 *     Res(f, g) = (-1)^{deg f deg g} lc(g)^{deg f - deg r} Res(g, r),
 * r = f mod g, together with Res(const c, g) = c^{deg g}.
 * A zero value (shared factor) is a legitimate result; only zero *inputs*
 * are rejected.
 */
inline ExtScalar resultant(const UPoly& h, const UPoly& g) {
    require_same_context(h.context(), g.context(), "resultant");
    if (h.is_zero() || g.is_zero())
        throw ZeroPolynomial("resultant of the zero polynomial");
    const PadicContext& ctx = h.context();
    UPoly f = h, s = g;
    ExtScalar acc = ExtScalar::one(ctx);
    bool negate = false;
    for (;;) {
        const int m = f.degree(), n = s.degree();
        if (m == 0) {
            acc = acc * f.leading().pow(n);
            break;
        }
        if (n == 0) {
            acc = acc * s.leading().pow(m);
            break;
        }
        if (m < n) {
            std::swap(f, s);
            if ((m & 1) && (n & 1)) negate = !negate;
            continue;
        }
        UPoly r = divmod(f, s).second;
        if (r.is_zero()) return ExtScalar::zero(ctx);
        if ((m & 1) && (n & 1)) negate = !negate;
        acc = acc * s.leading().pow(m - r.degree());
        f = std::move(s);
        s = std::move(r);
    }
    return negate ? -acc : acc;
}

/*
 * R(y) = Res_x(h(x), g(x + y)).  Its roots are exactly the differences
 * w - a over roots a of h and roots w of g, so the valuations of its roots
 * are the distance profile between the two root sets.
 *
 * deg R = deg h * deg g always: the x-leading coefficient of g(x+y) is the
 * constant lc(g), so nothing degenerates.  Computed by evaluation at the
 * integer points y = 0..D followed by exact Newton interpolation; symbolic
 * Sylvester elimination over E[y] is only used by the test oracles.
 */
inline UPoly bivariate_distance_resultant(const UPoly& h, const UPoly& g) {
    require_same_context(h.context(), g.context(), "bivariate resultant");
    if (h.is_zero() || g.is_zero())
        throw ZeroPolynomial("bivariate resultant of the zero polynomial");
    if (h.degree() < 1 || g.degree() < 1)
        throw DegreeTooLow("bivariate resultant needs deg h >= 1 and deg g >= 1");
    const PadicContext& ctx = h.context();
    const long long D = static_cast<long long>(h.degree()) * g.degree();

    std::vector<ExtScalar> dd;
    dd.reserve(static_cast<std::size_t>(D) + 1);
    for (long long k = 0; k <= D; ++k)
        dd.push_back(resultant(h, taylor_shift(g, ExtScalar::from_integer(ctx, k))));

    // divided differences on the consecutive nodes 0..D
    for (long long level = 1; level <= D; ++level)
        for (long long i = D; i >= level; --i) {
            auto ii = static_cast<std::size_t>(i);
            dd[ii] = (dd[ii] - dd[ii - 1]).scale(Rat(1, level));
        }

    // Newton form -> monomial basis
    UPoly result(ctx);
    for (long long i = D; i >= 0; --i) {
        UPoly node = monic_linear(ctx, ExtScalar::from_integer(ctx, i));
        if (i == D)
            result = UPoly(ctx, {dd[static_cast<std::size_t>(i)]});
        else
            result = result * node + UPoly(ctx, {dd[static_cast<std::size_t>(i)]});
    }
    if (result.degree() != D)
        throw InternalError("interpolated resultant has the wrong degree");
    return result;
}

namespace detail {

inline RatVec cyclotomic_rat(long long d) {
    RatVec f(static_cast<std::size_t>(d) + 1, Rat(0));
    f[0] = -1;
    f.back() = 1;  // x^d - 1
    for (long long e = 1; e < d; ++e)
        if (d % e == 0) f = rv_div_exact(std::move(f), cyclotomic_rat(e));
    return f;
}

} // namespace detail

// The d-th cyclotomic polynomial, via  x^d - 1 = prod_{e | d} Phi_e  with
// exact division.  Integer coefficients; irreducible over Q.
inline UPoly cyclotomic(long long d, const PadicContext& ctx) {
    if (d < 1) throw InvalidArgument("cyclotomic index must be >= 1");
    detail::RatVec f = detail::cyclotomic_rat(d);
    return UPoly::from_rationals(ctx, f);
}

} // namespace sendov

#endif
