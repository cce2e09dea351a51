#pragma once

#include <nlohmann/json.hpp>

#include "saxl/engine.hpp"

namespace saxl::cli {

/// Version of the JSON layout emitted by every command.
inline constexpr int kSchemaVersion = 1;

/// {"num": n, "den": d}. Components that do not fit in 64 bits are strings.
nlohmann::json rational_json(const Rational& q);
/// A number when it fits in 64 bits, a decimal string otherwise.
nlohmann::json integer_json(const BigInt& n);
/// The analyze report, absent optional values as null.
nlohmann::json report_json(const SaxlReport& report);

}  // namespace saxl::cli
