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
#ifndef SENDOV_NEWTON_HPP
#define SENDOV_NEWTON_HPP

#include <set>
#include <utility>
#include <vector>

#include "sendov/poly.hpp"
#include "sendov/valuation.hpp"

namespace sendov {

/*
 * Newton polygon: the lower convex hull of the points (i, v(a_i)) over the
 * nonzero coefficients.  A segment of slope mu and horizontal length lambda
 * certifies exactly lambda roots of valuation -mu.  This is the only place
 * the library ever "sees" a root; no root is ever materialized.
 *
 * Roots at 0 are kept out of the hull: zero_order counts the stripped
 * leading power of z, and vertices/segments are indexed relative to the
 * lowest nonzero coefficient.  Collinear points merge into one segment.
 */
struct NewtonSegment {
    Rat slope;
    long long length;

    friend bool operator==(const NewtonSegment& a, const NewtonSegment& b) {
        return a.slope == b.slope && a.length == b.length;
    }
};

struct NewtonPolygon {
    std::vector<std::pair<long long, Rat>> vertices;  // (abscissa, valuation)
    std::vector<NewtonSegment> segments;              // slopes strictly increasing
    long long zero_order = 0;
};

inline NewtonPolygon newton_polygon(const UPoly& f) {
    if (f.degree() < 1)
        throw DegreeTooLow("newton polygon needs degree >= 1");

    int low = 0;
    while (f.coeff(low).is_zero()) ++low;

    std::vector<std::pair<long long, Rat>> pts;
    for (int i = low; i <= f.degree(); ++i) {
        ValuationQ v = f.coeff(i).valuation();
        if (v.is_infinite()) continue;
        pts.emplace_back(i - low, v.finite());
    }

    // monotone sweep; pop the middle point whenever it is not strictly
    // below the chord (merges collinear runs)
    std::vector<std::pair<long long, Rat>> hull;
    for (const auto& pt : pts) {
        while (hull.size() >= 2) {
            const auto& a = hull[hull.size() - 2];
            const auto& b = hull.back();
            // slope(a,b) >= slope(b,pt), cross-multiplied on positive deltas
            if ((b.second - a.second) * (pt.first - b.first) >=
                (pt.second - b.second) * (b.first - a.first))
                hull.pop_back();
            else
                break;
        }
        hull.push_back(pt);
    }

    NewtonPolygon np;
    np.zero_order = low;
    np.vertices = std::move(hull);
    for (std::size_t k = 1; k < np.vertices.size(); ++k) {
        const auto& a = np.vertices[k - 1];
        const auto& b = np.vertices[k];
        np.segments.push_back(
            {Rat(b.second - a.second) / Rat(b.first - a.first, 1), b.first - a.first});
    }
    return np;
}

// The multiset of root valuations of f: lambda_k copies of -mu_k per
// segment, plus zero_order copies of +infinity.  Size = deg f.
inline std::multiset<ValuationQ> root_valuations(const UPoly& f) {
    NewtonPolygon np = newton_polygon(f);
    std::multiset<ValuationQ> vals;
    for (const NewtonSegment& s : np.segments)
        for (long long i = 0; i < s.length; ++i)
            vals.insert(ValuationQ(-s.slope));
    for (long long i = 0; i < np.zero_order; ++i)
        vals.insert(ValuationQ::infinite());
    return vals;
}

} // namespace sendov

#endif
