#pragma once

#include <string_view>

namespace locert {

/// Position of an element relative to the identity in some left ordering.
enum class Sign3 { Negative = -1, Trivial = 0, Positive = 1 };

enum class Comparison { Less = -1, Equal = 0, Greater = 1 };

constexpr Sign3 negate(Sign3 s) noexcept {
  return static_cast<Sign3>(-static_cast<int>(s));
}

constexpr std::string_view to_string(Sign3 s) noexcept {
  switch (s) {
    case Sign3::Negative: return "negative";
    case Sign3::Trivial: return "trivial";
    case Sign3::Positive: return "positive";
  }
  return "?";
}

constexpr std::string_view to_string(Comparison c) noexcept {
  switch (c) {
    case Comparison::Less: return "less";
    case Comparison::Equal: return "equal";
    case Comparison::Greater: return "greater";
  }
  return "?";
}

}  // namespace locert
