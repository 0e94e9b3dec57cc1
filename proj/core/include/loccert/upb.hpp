#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "loccert/certifier.hpp"
#include "loccert/state_set.hpp"

namespace loccert {

/// Default cap on P^N for the partition enumeration.
inline constexpr std::uint64_t kDefaultEnumerationBudget = 10'000'000;

class EnumerationBudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// members assigned to each party: partition[a] lists member indices.
using StatePartition = std::vector<std::vector<std::size_t>>;

struct ExtendibilityResult {
  bool is_unextendible = true;
  /// Present iff extendible: every party's share has local rank < d_a.
  std::optional<StatePartition> witness;
  std::vector<std::size_t> witness_local_ranks;
  std::uint64_t nodes_visited = 0;
};

/// Extendibility by partition enumeration: the set is extendible iff its
/// members can be split among the parties so that each party's local kets
/// span less than its whole space. Throws EnumerationBudgetExceeded when
/// P^N exceeds `budget`.
[[nodiscard]] ExtendibilityResult upb_extendibility(const StateSet& s,
                                                    std::uint64_t budget = kDefaultEnumerationBudget);

/// True iff N = sum_a (d_a - 1) + 1 and, for every party, every d_a-subset of
/// the local kets is linearly independent.
[[nodiscard]] bool minimal_upb_check(const StateSet& s);

/// Certified iff minimal_upb_check passes and N >= 2(d_a - 1) + 1 for all a.
[[nodiscard]] Verdict theorem2_check(const StateSet& s);

struct UpbReport {
  ExtendibilityResult extendibility;
  bool is_minimal = false;
  bool theorem2_applies = false;
  Verdict theorem2 = Verdict::inconclusive;
  std::size_t minimal_size = 0;      ///< sum_a (d_a - 1) + 1
  std::size_t min_states_bound = 0;  ///< 0 when some d_a < 2
};

[[nodiscard]] UpbReport analyze_upb(const StateSet& s,
                                    std::uint64_t budget = kDefaultEnumerationBudget);

}  // namespace loccert
