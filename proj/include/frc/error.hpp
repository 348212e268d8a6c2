/**************************************************************************
 * error.hpp
 *
 * Copyright 2026 The frcage Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 **************************************************************************/

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace frc {

enum class Errc {
    NotPrimePower,
    OrderMismatch,
    ResourceLimit,
    IndexOutOfRange,
    InvalidDegrees,
    NotCanonical,
    OutOfRange,
    NodeOutOfRange,
    NoSurvivingReplica,
    HelpersNotDistinct,
    ParseError,
    IoError,
};

constexpr std::string_view errc_name(Errc e) noexcept {
    switch (e) {
    case Errc::NotPrimePower: return "NotPrimePower";
    case Errc::OrderMismatch: return "OrderMismatch";
    case Errc::ResourceLimit: return "ResourceLimit";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::InvalidDegrees: return "InvalidDegrees";
    case Errc::NotCanonical: return "NotCanonical";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::NodeOutOfRange: return "NodeOutOfRange";
    case Errc::NoSurvivingReplica: return "NoSurvivingReplica";
    case Errc::HelpersNotDistinct: return "HelpersNotDistinct";
    case Errc::ParseError: return "ParseError";
    case Errc::IoError: return "IoError";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the Errc codes above.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }
    std::string_view name() const noexcept { return errc_name(code_); }

private:
    Errc code_;
};

} // namespace frc
