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

#ifndef PPBINOM_ERRORS_HPP
#define PPBINOM_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace ppbinom {

enum class ErrorCode {
    NonPrimeP,
    SizeExceeded,
    InvalidArgument,
    ZeroInverse,
    PreconditionViolated,
    BadAlpha,
    NotDivisible,
    FractionalResidue,
    AllZero,
    FixtureMismatch,
    UnsupportedQ,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can map it without parsing messages.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace ppbinom

#endif  // PPBINOM_ERRORS_HPP
