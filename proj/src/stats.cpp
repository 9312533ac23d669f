#include "lpvc/stats.hpp"

namespace lpvc {

namespace {
constexpr std::array<std::string_view, kRuleCount> kNames = {
    "R1", "R2", "R3", "R4", "R5", "R5b", "B1", "B2", "B3", "FR1", "FR2", "FR3", "FB1"};
}

std::string_view rule_name(Rule r) noexcept { return kNames[static_cast<std::size_t>(r)]; }

std::optional<Rule> rule_from_name(std::string_view name) noexcept {
  for (std::size_t i = 0; i < kRuleCount; ++i) {
    if (kNames[i] == name) return kAllRules[i];
  }
  return std::nullopt;
}

}  // namespace lpvc
