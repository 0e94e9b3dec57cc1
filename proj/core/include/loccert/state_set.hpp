#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "loccert/linalg.hpp"

namespace loccert {

/// Pairwise overlap bound for the members of a validated StateSet.
inline constexpr double kOrthogonalityTolerance = 1e-10;
inline constexpr double kPriorSumTolerance = 1e-10;

/// Raised when two members of a set are not orthogonal. Carries the pair.
class OrthogonalityError : public std::invalid_argument {
 public:
  OrthogonalityError(std::size_t first, std::size_t second, double overlap);
  std::size_t first;
  std::size_t second;
  double overlap;
};

/// One member of a state set: either a product of local kets (one per party)
/// or, for entangled members, a single global ket.
class MemberState {
 public:
  static MemberState product(std::vector<Ket> locals);
  static MemberState entangled(Ket global);

  [[nodiscard]] bool is_product() const { return !locals_.empty(); }
  /// Local kets; throws std::logic_error for entangled members.
  [[nodiscard]] const std::vector<Ket>& locals() const;
  [[nodiscard]] const Ket& global() const { return global_; }

 private:
  MemberState() = default;
  std::vector<Ket> locals_;
  Ket global_;
};

/// A partition of parties {0..P-1} into disjoint non-empty blocks.
struct PartyCut {
  std::vector<std::vector<std::size_t>> blocks;

  /// Parses "0,1|2" style specifications (zero-based party indices).
  static PartyCut parse(std::string_view spec);
  static PartyCut trivial(std::size_t parties);

  /// Throws std::invalid_argument unless the blocks cover 0..parties-1 exactly once.
  void validate(std::size_t parties) const;
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const PartyCut&, const PartyCut&) = default;
};

/// Every split of the parties into two non-empty blocks, block containing
/// party 0 first. There are 2^(P-1) - 1 of them.
[[nodiscard]] std::vector<PartyCut> all_bipartitions(std::size_t parties);

enum class OrthogonalityCheck { required, skipped };

/// Finite set of pure states on a multipartite space with prior weights.
///
/// Members are normalized on construction. With OrthogonalityCheck::required
/// (the default) the members must be pairwise orthogonal to within
/// kOrthogonalityTolerance. Immutable after construction.
class StateSet {
 public:
  /// Empty priors mean uniform priors.
  StateSet(std::vector<std::size_t> dims, std::vector<MemberState> states,
           std::vector<double> priors = {},
           OrthogonalityCheck check = OrthogonalityCheck::required);

  /// Convenience constructor for product members.
  static StateSet from_products(std::vector<std::size_t> dims,
                                std::vector<std::vector<Ket>> states,
                                std::vector<double> priors = {},
                                OrthogonalityCheck check = OrthogonalityCheck::required);

  [[nodiscard]] std::size_t parties() const { return dims_.size(); }
  [[nodiscard]] std::size_t size() const { return states_.size(); }
  [[nodiscard]] const std::vector<std::size_t>& dims() const { return dims_; }
  [[nodiscard]] std::size_t total_dim() const;
  [[nodiscard]] const std::vector<MemberState>& states() const { return states_; }
  [[nodiscard]] const std::vector<double>& priors() const { return priors_; }
  [[nodiscard]] bool all_product() const;
  [[nodiscard]] bool orthogonality_checked() const { return checked_; }

  [[nodiscard]] const Ket& local(std::size_t member, std::size_t party) const;
  [[nodiscard]] const Ket& global(std::size_t member) const;

  /// Largest |<Psi_m|Psi_n>| over m != n, and the pair attaining it.
  struct WorstOverlap {
    double overlap = 0.0;
    std::size_t first = 0;
    std::size_t second = 0;
  };
  [[nodiscard]] WorstOverlap worst_overlap() const;

 private:
  std::vector<std::size_t> dims_;
  std::vector<MemberState> states_;
  std::vector<double> priors_;
  bool checked_ = true;
};

/// Regroups parties into the blocks of `cut`. Each block's local ket is the
/// tensor of its members' kets in the order listed in the block.
[[nodiscard]] StateSet merge_cut(const StateSet& s, const PartyCut& cut);

}  // namespace loccert
