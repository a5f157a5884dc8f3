#pragma once

#include <string_view>

namespace tilecoin {

/// Outcome of a bounded search. FAILS is reserved for finite certificates;
/// running out of budget is UNKNOWN.
enum class Status { holds, fails, unknown };

inline std::string_view to_string(Status s) {
  switch (s) {
    case Status::holds: return "HOLDS";
    case Status::fails: return "FAILS";
    case Status::unknown: return "UNKNOWN";
  }
  return "UNKNOWN";
}

}  // namespace tilecoin
