#include "loccert/report.hpp"

#include <json.hpp>

#ifndef LOCCERT_VERSION
#define LOCCERT_VERSION "0.0.0"
#endif

namespace loccert {

using nlohmann::ordered_json;

std::string_view version() { return LOCCERT_VERSION; }

namespace {

ordered_json header(const ReportMeta& meta) {
  ordered_json j;
  j["tool"] = "loccert";
  j["version"] = std::string(version());
  j["command"] = meta.command;
  j["input"] = meta.input;
  ordered_json config = ordered_json::object();
  for (const auto& [key, value] : meta.config) {
    std::visit([&](const auto& v) { config[key] = v; }, value);
  }
  j["config"] = std::move(config);
  return j;
}

ordered_json certificate(const DyadCertificate& cert) {
  ordered_json j;
  j["verdict"] = std::string(to_string(cert.verdict));
  j["cut"] = cert.cut ? ordered_json(cert.cut->to_string()) : ordered_json(nullptr);
  ordered_json parties = ordered_json::array();
  for (const auto& rec : cert.parties) {
    ordered_json p;
    p["party"] = rec.party;
    p["members"] = rec.members;
    p["dim"] = rec.dim;
    p["pair_count"] = rec.pairs.size();
    ordered_json pairs = ordered_json::array();
    for (const auto& [i, k] : rec.pairs) pairs.push_back({i, k});
    p["pairs"] = std::move(pairs);
    p["span_rank"] = rec.span_rank;
    p["required"] = rec.required;
    p["saturated"] = rec.saturated;
    parties.push_back(std::move(p));
  }
  j["parties"] = std::move(parties);
  return j;
}

std::string finish(const ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string to_report(const DyadCertificate& cert, const ReportMeta& meta) {
  ordered_json j = header(meta);
  j["certificate"] = certificate(cert);
  return finish(j);
}

std::string to_report(const std::vector<DyadCertificate>& certs, const ReportMeta& meta) {
  ordered_json j = header(meta);
  bool all = !certs.empty();
  ordered_json list = ordered_json::array();
  for (const auto& c : certs) {
    all = all && c.verdict == Verdict::certified_indiscriminable;
    list.push_back(certificate(c));
  }
  j["verdict"] = std::string(to_string(all ? Verdict::certified_indiscriminable : Verdict::inconclusive));
  j["certificates"] = std::move(list);
  return finish(j);
}

std::string to_report(const StrongNlweReport& report, const ReportMeta& meta) {
  ordered_json j = header(meta);
  j["strong_nlwe"] = std::string(to_string(report.verdict));
  j["per_party"] = certificate(report.per_party);
  ordered_json cuts = ordered_json::array();
  for (const auto& c : report.cuts) cuts.push_back(certificate(c));
  j["cuts"] = std::move(cuts);
  return finish(j);
}

std::string to_report(const UpbReport& report, const ReportMeta& meta) {
  ordered_json j = header(meta);
  ordered_json ext;
  ext["is_unextendible"] = report.extendibility.is_unextendible;
  if (report.extendibility.witness) {
    ext["witness_partition"] = *report.extendibility.witness;
    ext["witness_local_ranks"] = report.extendibility.witness_local_ranks;
  } else {
    ext["witness_partition"] = nullptr;
  }
  ext["nodes_visited"] = report.extendibility.nodes_visited;
  j["extendibility"] = std::move(ext);
  j["is_minimal"] = report.is_minimal;
  j["minimal_size"] = report.minimal_size;
  j["theorem2"] = std::string(to_string(report.theorem2));
  j["min_states_bound"] = report.min_states_bound;
  return finish(j);
}

std::string to_report(const BoundResult& result, const ReportMeta& meta) {
  ordered_json j = header(meta);
  j["p_err_lower"] = result.p_err_lower;
  j["argmax_r"] = result.argmax_r;
  j["argmax_grid_index"] = result.argmax_grid_index;
  j["restarts_used"] = result.restarts_used;
  j["all_converged"] = result.all_converged;
  ordered_json curve = ordered_json::array();
  for (std::size_t k = 0; k < result.r_grid.size(); ++k) {
    ordered_json p;
    p["r"] = result.r_grid[k];
    p["delta"] = result.delta_r[k];
    p["converged"] = static_cast<bool>(result.converged[k]);
    p["grid_index"] = result.grid_index[k];
    curve.push_back(std::move(p));
  }
  j["curve"] = std::move(curve);
  return finish(j);
}

}  // namespace loccert
