#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

namespace loccert::testkit {

struct PropertyOutcome {
  std::size_t trials = 0;
  std::size_t failures = 0;
  /// Largest violation seen, in the property's own units.
  double worst = 0.0;
  std::string first_failure;

  [[nodiscard]] bool passed() const { return trials > 0 && failures == 0; }
};

PropertyOutcome appendix_b_gap_property(std::uint64_t seed, std::size_t trials);
PropertyOutcome lemma1_property(std::uint64_t seed, std::size_t trials);
PropertyOutcome delta_scale_invariance_property(std::uint64_t seed, std::size_t trials);
PropertyOutcome certifier_invariance_property(std::uint64_t seed, std::size_t trials);
PropertyOutcome gradient_property(std::uint64_t seed, std::size_t trials);
PropertyOutcome z_star_property(std::uint64_t seed, std::size_t trials, std::size_t samples);

}  // namespace loccert::testkit
