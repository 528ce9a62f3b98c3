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
#ifndef SENDOV_RATIONAL_HPP
#define SENDOV_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include "sendov/error.hpp"

namespace sendov {

// Unbounded exact integers and rationals.  Everything in this library is
// exact; there is no floating point anywhere.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& q) { return Int(numerator(q)); }
inline Int rat_den(const Rat& q) { return Int(denominator(q)); }

// Exponent of the prime p in n.  Requires n != 0.
inline long long int_padic_valuation(Int n, long long p) {
    if (n == 0)
        throw InvalidArgument("p-adic valuation of the integer 0 is undefined here");
    long long v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

inline long long int_padic_valuation(long long n, long long p) {
    return int_padic_valuation(Int(n), p);
}

// v_p of a nonzero rational: v_p(num) - v_p(den).
inline long long rat_padic_valuation(const Rat& q, long long p) {
    if (q == 0)
        throw InvalidArgument("p-adic valuation of the rational 0 is undefined here");
    long long v = 0;
    Int n = rat_num(q);
    if (n != 0) v += int_padic_valuation(n, p);
    v -= int_padic_valuation(rat_den(q), p);
    return v;
}

// Least nonnegative residue of n modulo p.
inline long long mod_p(const Int& n, long long p) {
    Int r = n % p;
    long long x = r.convert_to<long long>();
    if (x < 0) x += p;
    return x;
}

// Inverse of a modulo the prime p, extended Euclid.  Requires p prime and
// a not divisible by p.
inline long long mod_inverse(long long a, long long p) {
    a %= p;
    if (a < 0) a += p;
    if (a == 0) throw DivisionByZero("no inverse of 0 modulo p");
    long long r0 = p, r1 = a, s0 = 0, s1 = 1;
    while (r1 != 0) {
        long long q = r0 / r1;
        long long r2 = r0 - q * r1;
        long long s2 = s0 - q * s1;
        r0 = r1; r1 = r2;
        s0 = s1; s1 = s2;
    }
    // r0 == 1 since p is prime and p does not divide a
    s0 %= p;
    if (s0 < 0) s0 += p;
    return s0;
}

} // namespace sendov

#endif
