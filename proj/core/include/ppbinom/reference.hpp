/*
   Copyright 2026 The ppbinom Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef PPBINOM_REFERENCE_HPP
#define PPBINOM_REFERENCE_HPP

// Published intermediate values of the elimination argument, kept exactly as
// published. The pipeline recomputes each one and reports every difference.

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "ppbinom/poly.hpp"

namespace ppbinom::reference {

inline constexpr unsigned kAlphas[] = {2, 5, 8, 11, 14};
/// 3-power denominators of the brackets, same order as kAlphas.
inline constexpr unsigned kDAlpha[] = {2, 6, 10, 15, 19};
/// q from which each g_alpha(y) = 0 is forced, same order as kAlphas.
inline constexpr std::uint64_t kQThreshold[] = {8, 14, 20, 26, 32};

/// g_alpha as printed, alpha in kAlphas.
ZPoly printed_g(unsigned alpha);

inline std::vector<std::pair<std::uint64_t, unsigned>> resultant_g2_g5_factors() {
    return {{2, 5}, {3, 35}, {17, 2}, {23, 1}, {29, 1}, {103, 1}, {16069, 1}};
}
/// The product of the factors above, exactly as displayed (no sign).
BigInt resultant_g2_g5();

inline constexpr std::uint32_t kSurvivingPrimes[] = {2, 17, 23, 29};

struct GcdFixture {
    std::uint32_t p;
    std::vector<std::uint32_t> gcd;  // monic, little-endian
};

inline std::vector<GcdFixture> gcd_g2_g5_g8() {
    return {{2, {0, 1}}, {17, {1}}, {23, {1, 1}}, {29, {10, 1}}};
}

struct EvalFixture {
    std::uint32_t p;
    unsigned alpha;
    std::int64_t at;
    std::uint32_t value;
};

inline std::vector<EvalFixture> root_evaluations() {
    return {{23, 11, -1, 12}, {29, 11, -10, 0}, {29, 14, -10, 2}};
}

}  // namespace ppbinom::reference

#endif  // PPBINOM_REFERENCE_HPP
