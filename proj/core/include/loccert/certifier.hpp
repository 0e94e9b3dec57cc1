#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "loccert/linalg.hpp"
#include "loccert/state_set.hpp"

/// Dyad-span certificates of LOCC-closure indiscriminability for product sets.
///
/// For party a, J_a holds the ordered pairs (i, j), i != j, whose local kets are
/// orthogonal on a and non-orthogonal on every other party. When the dyads
/// |psi_i^a><psi_j^a| over J_a span the full (d_a^2 - 1)-dimensional traceless
/// subspace for every party, no product operator near the identity can keep the
/// set orthogonal, so the set cannot be perfectly discriminated even
/// asymptotically by LOCC. The test is sufficient only: a failing party yields
/// INCONCLUSIVE, never "discriminable".
namespace loccert {

/// Overlaps at or below this magnitude count as orthogonal.
inline constexpr double kDefaultOrthogonalityTolerance = 1e-9;

using IndexPair = std::pair<std::size_t, std::size_t>;

enum class Verdict { certified_indiscriminable, inconclusive };

[[nodiscard]] std::string_view to_string(Verdict v);

struct PartyRecord {
  std::size_t party = 0;
  /// Original parties merged into this one (a single entry without a cut).
  std::vector<std::size_t> members;
  std::size_t dim = 0;
  std::vector<IndexPair> pairs;
  std::size_t span_rank = 0;
  std::size_t required = 0;
  bool saturated = false;
};

struct DyadCertificate {
  std::vector<PartyRecord> parties;
  Verdict verdict = Verdict::inconclusive;
  /// Set when the certificate was computed on a merged set.
  std::optional<PartyCut> cut;
};

/// Ordered pairs (zero-based member indices) making up J_party.
[[nodiscard]] std::vector<IndexPair> compute_J(const StateSet& s, std::size_t party,
                                               double tol = kDefaultOrthogonalityTolerance);

/// Local dyads |psi_i><psi_j| on `party` for the given pairs.
[[nodiscard]] std::vector<Dyad> local_dyads(const StateSet& s, std::size_t party,
                                            std::span<const IndexPair> pairs);

[[nodiscard]] std::size_t dyad_span_rank(const StateSet& s, std::size_t party,
                                         std::span<const IndexPair> pairs,
                                         double rank_tol = kDefaultRankTolerance);

[[nodiscard]] DyadCertificate certify(const StateSet& s,
                                      double tol = kDefaultOrthogonalityTolerance);

/// Certificate of merge_cut(s, cut). The cut needs at least two blocks.
[[nodiscard]] DyadCertificate certify_cut(const StateSet& s, const PartyCut& cut,
                                          double tol = kDefaultOrthogonalityTolerance);

enum class StrongVerdict { certified, not_certified };

[[nodiscard]] std::string_view to_string(StrongVerdict v);

struct StrongNlweReport {
  StrongVerdict verdict = StrongVerdict::not_certified;
  DyadCertificate per_party;
  std::vector<DyadCertificate> cuts;  ///< one per bipartition
};

/// Certified iff certify(s) and certify_cut over every bipartition all
/// certify. Requires at least three parties.
[[nodiscard]] StrongNlweReport strong_nlwe(const StateSet& s,
                                           double tol = kDefaultOrthogonalityTolerance);

/// Smallest N with N(N-1) >= sum_a (d_a^2 - 1), i.e. ceil(1/2 + sqrt(T + 1/4)).
/// Every d_a must be >= 2.
[[nodiscard]] std::size_t min_states_bound(std::span<const std::size_t> dims);

/// The explicit n^2 - 1 traceless first-party dyads used to certify GenTiles1
/// by hand (standard-basis, |f><h|, |h><h| and |h_01><n/2| groups).
[[nodiscard]] std::vector<Dyad> gentiles1_witness_dyads(std::size_t n);

}  // namespace loccert
