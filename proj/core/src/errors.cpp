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

#include "ppbinom/errors.hpp"

namespace ppbinom {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::NonPrimeP: return "NonPrimeP";
        case ErrorCode::SizeExceeded: return "SizeExceeded";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::ZeroInverse: return "ZeroInverse";
        case ErrorCode::PreconditionViolated: return "PreconditionViolated";
        case ErrorCode::BadAlpha: return "BadAlpha";
        case ErrorCode::NotDivisible: return "NotDivisible";
        case ErrorCode::FractionalResidue: return "FractionalResidue";
        case ErrorCode::AllZero: return "AllZero";
        case ErrorCode::FixtureMismatch: return "FixtureMismatch";
        case ErrorCode::UnsupportedQ: return "UnsupportedQ";
    }
    return "Unknown";
}

}  // namespace ppbinom
