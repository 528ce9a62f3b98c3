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
#ifndef SENDOV_VALUATION_HPP
#define SENDOV_VALUATION_HPP

#include <string>

#include "sendov/error.hpp"
#include "sendov/rational.hpp"

namespace sendov {

/*
 * Value of an additive valuation: an exact rational, or +infinity for the
 * valuation of 0.  The corresponding absolute value is |x| = p^{-v(x)}.
 * Totally ordered with +infinity above every finite value; addition is
 * absorbing on +infinity.
 */
class ValuationQ {
public:
    ValuationQ(const Rat& q) : inf_(false), q_(q) {}        // NOLINT(google-explicit-constructor)
    ValuationQ(long long q) : inf_(false), q_(q) {}         // NOLINT(google-explicit-constructor)

    static ValuationQ infinite() { return ValuationQ(tag_inf{}); }

    bool is_infinite() const { return inf_; }

    const Rat& finite() const {
        if (inf_) throw InternalError("finite() called on infinite valuation");
        return q_;
    }

    friend bool operator==(const ValuationQ& a, const ValuationQ& b) {
        if (a.inf_ || b.inf_) return a.inf_ && b.inf_;
        return a.q_ == b.q_;
    }
    friend bool operator!=(const ValuationQ& a, const ValuationQ& b) { return !(a == b); }
    friend bool operator<(const ValuationQ& a, const ValuationQ& b) {
        if (a.inf_) return false;
        if (b.inf_) return true;
        return a.q_ < b.q_;
    }
    friend bool operator>(const ValuationQ& a, const ValuationQ& b) { return b < a; }
    friend bool operator<=(const ValuationQ& a, const ValuationQ& b) { return !(b < a); }
    friend bool operator>=(const ValuationQ& a, const ValuationQ& b) { return !(a < b); }

    friend ValuationQ operator+(const ValuationQ& a, const ValuationQ& b) {
        if (a.inf_ || b.inf_) return infinite();
        return ValuationQ(a.q_ + b.q_);
    }

    // Negation of a finite valuation (v(x^{-1}) = -v(x) for x != 0).
    ValuationQ operator-() const {
        if (inf_) throw InternalError("negation of an infinite valuation");
        return ValuationQ(-q_);
    }

    std::string str() const {
        if (inf_) return "inf";
        std::string s = rat_num(q_).str();
        if (rat_den(q_) != 1) s += "/" + rat_den(q_).str();
        return s;
    }

private:
    struct tag_inf {};
    explicit ValuationQ(tag_inf) : inf_(true), q_(0) {}

    bool inf_;
    Rat q_;
};

} // namespace sendov

#endif
