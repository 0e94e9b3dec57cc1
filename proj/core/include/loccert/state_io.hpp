#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "loccert/state_set.hpp"

namespace loccert {

/// Schema violation in a state-set document.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// State-set document (JSON):
///   {"version": 1, "dims": [d0, d1, ...], "priors": [p0, ...],
///    "states": [ [ [[re, im], ...], [[re, im], ...] ], ... ]}
/// Each product member is a list of one complex vector per party. An
/// entangled member is written as {"global": [[re, im], ...]}.
/// Parsing validates every StateSet invariant; orthogonality failures are
/// reported as OrthogonalityError naming the offending pair.
[[nodiscard]] std::string to_json_string(const StateSet& s);
[[nodiscard]] StateSet from_json_string(std::string_view text);

void save(const StateSet& s, const std::filesystem::path& path);
[[nodiscard]] StateSet load(const std::filesystem::path& path);

}  // namespace loccert
