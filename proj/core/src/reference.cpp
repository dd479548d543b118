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

#include "ppbinom/reference.hpp"

#include <string>

#include "ppbinom/errors.hpp"

namespace ppbinom::reference {

namespace {

// Highest degree first, exactly as published.
constexpr std::int64_t kG2[] = {
    2, 3, -23, -8, -9, 44};
constexpr std::int64_t kG5[] = {
    -14, -8, 22, -469, -1093, 8852, 6801, 10527, -61068, -18619, -25033, 120197, 13516, 16822,
    -71162};
constexpr std::int64_t kG8[] = {
    130, 57, -187, 4082, 3585, -7667, 156234, 453573, -3916551, -4144622, -7594467, 48939959,
    25221008, 39342423, -213366911, -61811112, -88032825, 422650317, 66303028, 88882095,
    -389019163, -25886212, -33211905, 135094180};
constexpr std::int64_t kG11[] = {
    -3952, -1522, 5474, -139802, -89324, 229126, -3943602, -4392909, 8336511, -180820302,
    -605825169, 5521784781LL, 7111655988LL, 14607372831LL, -101269369227LL, -69095625624LL,
    -119477261853LL, 705650100129LL, 303870716124LL, 475920749355LL, -2503382174319LL,
    -706243777836LL, -1034492806725LL, 4972469163636LL, 898579001889LL, 1253008322595LL,
    -5598768742164LL, -591556509206LL, -794043854630LL, 3339003167188LL, 157572058982LL,
    205140400010LL, -819352075360LL};
constexpr std::int64_t kG14[] = {
    41800, 14895, -56695, 1691000, 905631, -2596631, 47250150, 37894401, -85144551, 1395800990,
    1826164521, -3221965511LL, 75566097190LL, 281332431561LL, -2683745985685LL, -3976231919076LL,
    -8901790877799LL, 65232090577890LL, 53701334712609LL, 100487514543597LL, -632854611825486LL,
    -347885978019711LL, -586551837541203LL, 3307822221633594LL, 1283881108529889LL,
    2015859062567817LL, -10419893389315746LL, -2892546806289271LL, -4307726185011783LL,
    20728564105915330LL, 4054215382726378LL, 5793391583605092LL, -26245535590106350LL,
    -3451745974770042LL, -4770402189292728LL, 20520594631893930LL, 1634454816505198LL,
    2197118421394272LL, -9034762128135730LL, -330180086243950LL, -433563200685120LL,
    1713531735146800LL};

ZPoly from_descending(std::span<const std::int64_t> coeffs) {
    std::vector<BigInt> v;
    v.reserve(coeffs.size());
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) v.emplace_back(static_cast<long>(*it));
    return ZPoly(std::move(v));
}

}  // namespace

ZPoly printed_g(unsigned alpha) {
    switch (alpha) {
        case 2: return from_descending(kG2);
        case 5: return from_descending(kG5);
        case 8: return from_descending(kG8);
        case 11: return from_descending(kG11);
        case 14: return from_descending(kG14);
        default: break;
    }
    throw Error(ErrorCode::BadAlpha, "no published g for alpha=" + std::to_string(alpha));
}

BigInt resultant_g2_g5() {
    // As displayed: the unsigned product. The resultant itself is negative.
    BigInt r = 1;
    for (const auto& [p, m] : resultant_g2_g5_factors()) {
        BigInt pk;
        mpz_pow_ui(pk.get_mpz_t(), BigInt(static_cast<unsigned long>(p)).get_mpz_t(), m);
        r *= pk;
    }
    return r;
}

}  // namespace ppbinom::reference
