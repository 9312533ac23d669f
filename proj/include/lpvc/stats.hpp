#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

namespace lpvc {

/// Reduction, branching and family-construction rules whose firings are counted.
enum class Rule : std::uint8_t { R1, R2, R3, R4, R5, R5b, B1, B2, B3, FR1, FR2, FR3, FB1 };

inline constexpr std::size_t kRuleCount = 13;

inline constexpr std::array<Rule, kRuleCount> kAllRules = {
    Rule::R1, Rule::R2, Rule::R3, Rule::R4,  Rule::R5,  Rule::R5b, Rule::B1,
    Rule::B2, Rule::B3, Rule::FR1, Rule::FR2, Rule::FR3, Rule::FB1};

[[nodiscard]] std::string_view rule_name(Rule r) noexcept;
[[nodiscard]] std::optional<Rule> rule_from_name(std::string_view name) noexcept;

struct SearchStats {
  std::uint64_t nodes_total = 0;
  std::uint64_t leaves = 0;
  std::uint32_t max_depth = 0;
  std::array<std::uint64_t, kRuleCount> rule_fires{};

  void fire(Rule r) noexcept { ++rule_fires[static_cast<std::size_t>(r)]; }
  [[nodiscard]] std::uint64_t fires(Rule r) const noexcept { return rule_fires[static_cast<std::size_t>(r)]; }
};

}  // namespace lpvc
