#include "loccert/state_set.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

namespace loccert {

namespace {

std::string describe_overlap(std::size_t first, std::size_t second, double overlap) {
  std::ostringstream os;
  os.precision(3);
  os << "states " << first << " and " << second << " are not orthogonal (|<a|b>| = "
     << std::scientific << overlap << ")";
  return os.str();
}

Ket normalized(const Ket& k, std::string_view what) {
  if (k.size() == 0) throw std::invalid_argument(std::string(what) + ": empty ket");
  if (!all_finite(k)) throw std::invalid_argument(std::string(what) + ": non-finite amplitude");
  const double n = k.norm();
  if (!(n > 0.0)) throw std::invalid_argument(std::string(what) + ": zero vector");
  // Leave unit kets untouched so that reloading a saved set is bit-exact.
  if (std::abs(n - 1.0) <= 4 * std::numeric_limits<double>::epsilon()) return k;
  return k / n;
}

}  // namespace

OrthogonalityError::OrthogonalityError(std::size_t a, std::size_t b, double ov)
    : std::invalid_argument(describe_overlap(a, b, ov)), first(a), second(b), overlap(ov) {}

MemberState MemberState::product(std::vector<Ket> locals) {
  if (locals.empty()) throw std::invalid_argument("MemberState: no local kets");
  MemberState m;
  for (auto& k : locals) k = normalized(k, "MemberState");
  m.global_ = tensor(std::span<const Ket>(locals));
  m.locals_ = std::move(locals);
  return m;
}

MemberState MemberState::entangled(Ket global) {
  MemberState m;
  m.global_ = normalized(global, "MemberState");
  return m;
}

const std::vector<Ket>& MemberState::locals() const {
  if (!is_product()) throw std::logic_error("MemberState: entangled member has no local kets");
  return locals_;
}

PartyCut PartyCut::parse(std::string_view spec) {
  PartyCut cut;
  std::vector<std::size_t> block;
  std::string token;
  auto flush_token = [&] {
    if (token.empty()) throw std::invalid_argument("cut spec: empty party index in '" +
                                                   std::string(spec) + "'");
    if (!std::all_of(token.begin(), token.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      throw std::invalid_argument("cut spec: '" + token + "' is not a party index");
    }
    block.push_back(static_cast<std::size_t>(std::stoul(token)));
    token.clear();
  };
  for (char c : spec) {
    if (c == ' ') continue;
    if (c == ',') {
      flush_token();
    } else if (c == '|') {
      flush_token();
      cut.blocks.push_back(std::move(block));
      block.clear();
    } else {
      token.push_back(c);
    }
  }
  flush_token();
  cut.blocks.push_back(std::move(block));
  return cut;
}

PartyCut PartyCut::trivial(std::size_t parties) {
  PartyCut cut;
  for (std::size_t p = 0; p < parties; ++p) cut.blocks.push_back({p});
  return cut;
}

void PartyCut::validate(std::size_t parties) const {
  if (blocks.empty()) throw std::invalid_argument("cut: no blocks");
  std::vector<int> seen(parties, 0);
  for (const auto& b : blocks) {
    if (b.empty()) throw std::invalid_argument("cut: empty block");
    for (std::size_t p : b) {
      if (p >= parties) {
        throw std::invalid_argument("cut: party " + std::to_string(p) + " out of range (P = " +
                                    std::to_string(parties) + ")");
      }
      if (seen[p]++) throw std::invalid_argument("cut: party " + std::to_string(p) + " repeated");
    }
  }
  for (std::size_t p = 0; p < parties; ++p) {
    if (!seen[p]) throw std::invalid_argument("cut: party " + std::to_string(p) + " missing");
  }
}

std::string PartyCut::to_string() const {
  std::string out;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (b) out += '|';
    for (std::size_t i = 0; i < blocks[b].size(); ++i) {
      if (i) out += ',';
      out += std::to_string(blocks[b][i]);
    }
  }
  return out;
}

std::vector<PartyCut> all_bipartitions(std::size_t parties) {
  std::vector<PartyCut> cuts;
  if (parties < 2) return cuts;
  // Party 0 always sits in the first block; enumerate the others' membership.
  const std::size_t count = std::size_t{1} << (parties - 1);
  for (std::size_t mask = 0; mask + 1 < count; ++mask) {
    PartyCut cut;
    cut.blocks.resize(2);
    cut.blocks[0].push_back(0);
    for (std::size_t p = 1; p < parties; ++p) {
      const bool with_zero = (mask >> (p - 1)) & 1U;
      cut.blocks[with_zero ? 0 : 1].push_back(p);
    }
    cuts.push_back(std::move(cut));
  }
  return cuts;
}

StateSet::StateSet(std::vector<std::size_t> dims, std::vector<MemberState> states,
                   std::vector<double> priors, OrthogonalityCheck check)
    : dims_(std::move(dims)),
      states_(std::move(states)),
      priors_(std::move(priors)),
      checked_(check == OrthogonalityCheck::required) {
  if (dims_.empty()) throw std::invalid_argument("StateSet: no parties");
  for (std::size_t d : dims_) {
    if (d == 0) throw std::invalid_argument("StateSet: party dimension must be >= 1");
  }
  if (states_.empty()) throw std::invalid_argument("StateSet: no states");
  const std::size_t D = total_dim();
  for (std::size_t m = 0; m < states_.size(); ++m) {
    const auto& st = states_[m];
    if (st.is_product()) {
      if (st.locals().size() != dims_.size()) {
        throw std::invalid_argument("StateSet: state " + std::to_string(m) + " has " +
                                    std::to_string(st.locals().size()) + " local kets, expected " +
                                    std::to_string(dims_.size()));
      }
      for (std::size_t a = 0; a < dims_.size(); ++a) {
        if (static_cast<std::size_t>(st.locals()[a].size()) != dims_[a]) {
          throw std::invalid_argument("StateSet: state " + std::to_string(m) + ", party " +
                                      std::to_string(a) + " has dimension " +
                                      std::to_string(st.locals()[a].size()) + ", expected " +
                                      std::to_string(dims_[a]));
        }
      }
    } else if (static_cast<std::size_t>(st.global().size()) != D) {
      throw std::invalid_argument("StateSet: state " + std::to_string(m) +
                                  " has global dimension " + std::to_string(st.global().size()) +
                                  ", expected " + std::to_string(D));
    }
  }

  if (priors_.empty()) {
    priors_.assign(states_.size(), 1.0 / static_cast<double>(states_.size()));
  }
  if (priors_.size() != states_.size()) {
    throw std::invalid_argument("StateSet: " + std::to_string(priors_.size()) + " priors for " +
                                std::to_string(states_.size()) + " states");
  }
  double total = 0.0;
  for (double p : priors_) {
    if (!(p > 0.0) || !std::isfinite(p)) {
      throw std::invalid_argument("StateSet: priors must be positive and finite");
    }
    total += p;
  }
  if (std::abs(total - 1.0) > kPriorSumTolerance) {
    throw std::invalid_argument("StateSet: priors sum to " + std::to_string(total) +
                                ", expected 1");
  }

  if (checked_) {
    const WorstOverlap worst = worst_overlap();
    if (worst.overlap > kOrthogonalityTolerance) {
      throw OrthogonalityError(worst.first, worst.second, worst.overlap);
    }
  }
}

StateSet StateSet::from_products(std::vector<std::size_t> dims,
                                 std::vector<std::vector<Ket>> states, std::vector<double> priors,
                                 OrthogonalityCheck check) {
  std::vector<MemberState> members;
  members.reserve(states.size());
  for (auto& s : states) members.push_back(MemberState::product(std::move(s)));
  return StateSet(std::move(dims), std::move(members), std::move(priors), check);
}

std::size_t StateSet::total_dim() const {
  return std::accumulate(dims_.begin(), dims_.end(), std::size_t{1}, std::multiplies<>());
}

bool StateSet::all_product() const {
  return std::all_of(states_.begin(), states_.end(),
                     [](const MemberState& m) { return m.is_product(); });
}

const Ket& StateSet::local(std::size_t member, std::size_t party) const {
  if (member >= states_.size()) throw std::out_of_range("StateSet::local: member index");
  if (party >= dims_.size()) throw std::out_of_range("StateSet::local: party index");
  return states_[member].locals()[party];
}

const Ket& StateSet::global(std::size_t member) const {
  if (member >= states_.size()) throw std::out_of_range("StateSet::global: member index");
  return states_[member].global();
}

StateSet::WorstOverlap StateSet::worst_overlap() const {
  WorstOverlap worst;
  for (std::size_t m = 0; m < states_.size(); ++m) {
    for (std::size_t n = m + 1; n < states_.size(); ++n) {
      double ov = 0.0;
      if (states_[m].is_product() && states_[n].is_product()) {
        ov = 1.0;
        for (std::size_t a = 0; a < dims_.size(); ++a) {
          ov *= std::abs(inner(states_[m].locals()[a], states_[n].locals()[a]));
        }
      } else {
        ov = std::abs(inner(states_[m].global(), states_[n].global()));
      }
      if (ov > worst.overlap) worst = {ov, m, n};
    }
  }
  return worst;
}

namespace {

// Reorders a global amplitude vector from the original party order to `order`.
Ket permute_parties(const Ket& global, const std::vector<std::size_t>& dims,
                    const std::vector<std::size_t>& order) {
  const std::size_t P = dims.size();
  std::vector<std::size_t> old_stride(P), new_dims(P), new_stride(P);
  std::size_t s = 1;
  for (std::size_t a = P; a-- > 0;) {
    old_stride[a] = s;
    s *= dims[a];
  }
  for (std::size_t i = 0; i < P; ++i) new_dims[i] = dims[order[i]];
  s = 1;
  for (std::size_t i = P; i-- > 0;) {
    new_stride[i] = s;
    s *= new_dims[i];
  }
  Ket out(global.size());
  for (Eigen::Index idx = 0; idx < global.size(); ++idx) {
    std::size_t new_idx = 0;
    for (std::size_t i = 0; i < P; ++i) {
      const std::size_t digit = (static_cast<std::size_t>(idx) / old_stride[order[i]]) %
                                dims[order[i]];
      new_idx += digit * new_stride[i];
    }
    out(static_cast<Eigen::Index>(new_idx)) = global(idx);
  }
  return out;
}

}  // namespace

StateSet merge_cut(const StateSet& s, const PartyCut& cut) {
  cut.validate(s.parties());
  std::vector<std::size_t> new_dims;
  std::vector<std::size_t> order;
  for (const auto& block : cut.blocks) {
    std::size_t d = 1;
    for (std::size_t p : block) {
      d *= s.dims()[p];
      order.push_back(p);
    }
    new_dims.push_back(d);
  }
  std::vector<MemberState> members;
  members.reserve(s.size());
  for (const auto& st : s.states()) {
    if (st.is_product()) {
      std::vector<Ket> locals;
      for (const auto& block : cut.blocks) {
        std::vector<Ket> parts;
        for (std::size_t p : block) parts.push_back(st.locals()[p]);
        locals.push_back(tensor(std::span<const Ket>(parts)));
      }
      members.push_back(MemberState::product(std::move(locals)));
    } else {
      members.push_back(MemberState::entangled(permute_parties(st.global(), s.dims(), order)));
    }
  }
  return StateSet(std::move(new_dims), std::move(members), s.priors(),
                  s.orthogonality_checked() ? OrthogonalityCheck::required
                                            : OrthogonalityCheck::skipped);
}

}  // namespace loccert
