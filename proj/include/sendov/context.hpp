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
#ifndef SENDOV_CONTEXT_HPP
#define SENDOV_CONTEXT_HPP

#include "sendov/error.hpp"
#include "sendov/rational.hpp"

namespace sendov {

/*
 * The working coefficient field E = Q(p^{1/b}): a prime p and a ramification
 * index b.  pi denotes the uniformizer p^{1/b}, with v(pi) = 1/b and
 * pi^b = p; the valuation is normalized so that v(p) = 1.
 *
 * Contexts are tiny value types; two scalars interoperate only when their
 * contexts have identical (p, b).
 */
class PadicContext {
public:
    explicit PadicContext(long long prime, int ram = 1) : p_(prime), b_(ram) {
        if (prime < 2 || prime > max_prime)
            throw InvalidContext("prime must lie in [2, 2^31)");
        if (!trial_division_prime(prime))
            throw InvalidContext(std::to_string(prime) + " is not prime");
        if (ram < 1 || ram > max_ram)
            throw InvalidContext("ramification index must lie in [1, 64]");
    }

    long long prime() const noexcept { return p_; }
    int ram() const noexcept { return b_; }

    // v(pi) = 1/b.
    Rat pi_valuation() const { return Rat(1, b_); }

    friend bool operator==(const PadicContext& a, const PadicContext& b) {
        return a.p_ == b.p_ && a.b_ == b.b_;
    }
    friend bool operator!=(const PadicContext& a, const PadicContext& b) {
        return !(a == b);
    }

private:
    static constexpr long long max_prime = (1LL << 31) - 1;
    static constexpr int max_ram = 64;

    static bool trial_division_prime(long long n) {
        if (n < 4) return n >= 2;
        if (n % 2 == 0) return false;
        for (long long d = 3; d * d <= n; d += 2)
            if (n % d == 0) return false;
        return true;
    }

    long long p_;
    int b_;
};

inline void require_same_context(const PadicContext& a, const PadicContext& b,
                                 const char* where) {
    if (a != b)
        throw ContextMismatch(std::string(where) + ": operands from different fields (p=" +
                              std::to_string(a.prime()) + ",b=" + std::to_string(a.ram()) +
                              ") vs (p=" + std::to_string(b.prime()) + ",b=" +
                              std::to_string(b.ram()) + ")");
}

} // namespace sendov

#endif
