#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "loccert/certifier.hpp"
#include "loccert/error_bound.hpp"
#include "loccert/upb.hpp"

namespace loccert {

[[nodiscard]] std::string_view version();

using ConfigValue = std::variant<std::string, std::int64_t, double, bool>;

/// Provenance embedded in every report.
struct ReportMeta {
  std::string command;
  std::string input;
  /// Kept in insertion order.
  std::vector<std::pair<std::string, ConfigValue>> config;
};

// JSON text, indented by two spaces and newline-terminated. Identical inputs
// give byte-identical output.
[[nodiscard]] std::string to_report(const DyadCertificate& cert, const ReportMeta& meta);
[[nodiscard]] std::string to_report(const std::vector<DyadCertificate>& certs, const ReportMeta& meta);
[[nodiscard]] std::string to_report(const StrongNlweReport& report, const ReportMeta& meta);
[[nodiscard]] std::string to_report(const UpbReport& report, const ReportMeta& meta);
[[nodiscard]] std::string to_report(const BoundResult& result, const ReportMeta& meta);

}  // namespace loccert
