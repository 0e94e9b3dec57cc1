#include "loccert/state_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace loccert {

namespace {

using nlohmann::json;

json encode_vector(const Ket& k) {
  json out = json::array();
  for (Eigen::Index i = 0; i < k.size(); ++i) out.push_back({k(i).real(), k(i).imag()});
  return out;
}

Ket decode_vector(const json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) throw FormatError(where + ": expected a non-empty vector");
  Ket k(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    const json& c = j[i];
    if (!c.is_array() || c.size() != 2 || !c[0].is_number() || !c[1].is_number()) {
      throw FormatError(where + "[" + std::to_string(i) + "]: expected [re, im]");
    }
    k(static_cast<Eigen::Index>(i)) = Complex(c[0].get<double>(), c[1].get<double>());
  }
  return k;
}

}  // namespace

std::string to_json_string(const StateSet& s) {
  json doc;
  doc["version"] = 1;
  doc["dims"] = s.dims();
  doc["priors"] = s.priors();
  json states = json::array();
  for (const auto& st : s.states()) {
    if (st.is_product()) {
      json entry = json::array();
      for (const Ket& k : st.locals()) entry.push_back(encode_vector(k));
      states.push_back(std::move(entry));
    } else {
      states.push_back({{"global", encode_vector(st.global())}});
    }
  }
  doc["states"] = std::move(states);
  // nlohmann/json prints doubles with 17 significant digits.
  return doc.dump(1) + "\n";
}

StateSet from_json_string(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("state-set document is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw FormatError("state-set document must be an object");
  if (!doc.contains("version") || !doc["version"].is_number_integer() ||
      doc["version"].get<int>() != 1) {
    throw FormatError("state-set document: 'version' must be the integer 1");
  }
  if (!doc.contains("dims") || !doc["dims"].is_array() || doc["dims"].empty()) {
    throw FormatError("state-set document: 'dims' must be a non-empty list");
  }
  std::vector<std::size_t> dims;
  for (const json& d : doc["dims"]) {
    if (!d.is_number_integer() || d.get<long long>() < 1) {
      throw FormatError("state-set document: dims must be positive integers");
    }
    dims.push_back(d.get<std::size_t>());
  }
  std::vector<double> priors;
  if (doc.contains("priors")) {
    if (!doc["priors"].is_array()) throw FormatError("state-set document: 'priors' must be a list");
    for (const json& p : doc["priors"]) {
      if (!p.is_number()) throw FormatError("state-set document: priors must be numbers");
      priors.push_back(p.get<double>());
    }
  }
  if (!doc.contains("states") || !doc["states"].is_array() || doc["states"].empty()) {
    throw FormatError("state-set document: 'states' must be a non-empty list");
  }
  std::vector<MemberState> members;
  const json& states = doc["states"];
  try {
    for (std::size_t m = 0; m < states.size(); ++m) {
      const std::string where = "states[" + std::to_string(m) + "]";
      const json& entry = states[m];
      if (entry.is_object()) {
        if (!entry.contains("global")) throw FormatError(where + ": object entry needs 'global'");
        members.push_back(
            MemberState::entangled(decode_vector(entry["global"], where + ".global")));
      } else if (entry.is_array()) {
        if (entry.size() != dims.size()) {
          throw FormatError(where + ": expected " + std::to_string(dims.size()) +
                            " local vectors, got " + std::to_string(entry.size()));
        }
        std::vector<Ket> locals;
        for (std::size_t a = 0; a < entry.size(); ++a) {
          locals.push_back(decode_vector(entry[a], where + "[" + std::to_string(a) + "]"));
        }
        members.push_back(MemberState::product(std::move(locals)));
      } else {
        throw FormatError(where + ": expected a list of local vectors or {\"global\": ...}");
      }
    }
    return StateSet(std::move(dims), std::move(members), std::move(priors));
  } catch (const OrthogonalityError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw FormatError(std::string("state-set document: ") + e.what());
  }
}

void save(const StateSet& s, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  out << to_json_string(s);
  if (!out) throw std::runtime_error("failed writing '" + path.string() + "'");
}

StateSet load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return from_json_string(buf.str());
}

}  // namespace loccert
