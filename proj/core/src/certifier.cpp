#include "loccert/certifier.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "loccert/families.hpp"

namespace loccert {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::certified_indiscriminable:
      return "CERTIFIED_INDISCRIMINABLE";
    case Verdict::inconclusive:
      return "INCONCLUSIVE";
  }
  return "?";
}

std::string_view to_string(StrongVerdict v) {
  return v == StrongVerdict::certified ? "CERTIFIED" : "NOT_CERTIFIED";
}

namespace {

void require_product(const StateSet& s, std::string_view who) {
  if (!s.all_product()) {
    throw std::invalid_argument(std::string(who) + ": every member must be a product state");
  }
}

void require_party(const StateSet& s, std::size_t party, std::string_view who) {
  if (party >= s.parties()) {
    throw std::invalid_argument(std::string(who) + ": party " + std::to_string(party) +
                                " out of range (P = " + std::to_string(s.parties()) + ")");
  }
}

// |<psi_i^a|psi_j^a>| for every party and unordered pair, computed once.
class OverlapTable {
 public:
  explicit OverlapTable(const StateSet& s) : n_(s.size()), p_(s.parties()) {
    table_.resize(n_ * n_ * p_, 0.0);
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = i + 1; j < n_; ++j) {
        for (std::size_t a = 0; a < p_; ++a) {
          const double ov = std::abs(inner(s.local(i, a), s.local(j, a)));
          table_[(i * n_ + j) * p_ + a] = ov;
          table_[(j * n_ + i) * p_ + a] = ov;
        }
      }
    }
  }
  [[nodiscard]] double operator()(std::size_t i, std::size_t j, std::size_t a) const {
    return table_[(i * n_ + j) * p_ + a];
  }

 private:
  std::size_t n_, p_;
  std::vector<double> table_;
};

std::vector<IndexPair> pairs_for(const OverlapTable& ov, std::size_t n, std::size_t parties,
                                 std::size_t party, double tol) {
  std::vector<IndexPair> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || ov(i, j, party) > tol) continue;
      bool others_overlap = true;
      for (std::size_t b = 0; b < parties && others_overlap; ++b) {
        if (b != party && !(ov(i, j, b) > tol)) others_overlap = false;
      }
      if (others_overlap) pairs.emplace_back(i, j);
    }
  }
  return pairs;
}

DyadCertificate certify_impl(const StateSet& s, double tol) {
  require_product(s, "certify");
  if (!(tol > 0.0)) throw std::invalid_argument("certify: tolerance must be > 0");
  const OverlapTable ov(s);
  DyadCertificate cert;
  bool all_saturated = true;
  for (std::size_t a = 0; a < s.parties(); ++a) {
    PartyRecord rec;
    rec.party = a;
    rec.members = {a};
    rec.dim = s.dims()[a];
    rec.pairs = pairs_for(ov, s.size(), s.parties(), a, tol);
    rec.span_rank = dyad_span_rank(s, a, rec.pairs);
    rec.required = rec.dim * rec.dim - 1;
    rec.saturated = rec.span_rank >= rec.required;
    all_saturated = all_saturated && rec.saturated;
    cert.parties.push_back(std::move(rec));
  }
  cert.verdict = all_saturated ? Verdict::certified_indiscriminable : Verdict::inconclusive;
  return cert;
}

}  // namespace

std::vector<IndexPair> compute_J(const StateSet& s, std::size_t party, double tol) {
  require_product(s, "compute_J");
  require_party(s, party, "compute_J");
  if (!(tol > 0.0)) throw std::invalid_argument("compute_J: tolerance must be > 0");
  return pairs_for(OverlapTable(s), s.size(), s.parties(), party, tol);
}

std::vector<Dyad> local_dyads(const StateSet& s, std::size_t party,
                              std::span<const IndexPair> pairs) {
  require_product(s, "local_dyads");
  require_party(s, party, "local_dyads");
  std::vector<Dyad> dyads;
  dyads.reserve(pairs.size());
  for (const auto& [i, j] : pairs) {
    if (i >= s.size() || j >= s.size()) {
      throw std::invalid_argument("local_dyads: pair (" + std::to_string(i) + ", " +
                                  std::to_string(j) + ") out of range (N = " +
                                  std::to_string(s.size()) + ")");
    }
    dyads.emplace_back(s.local(i, party), s.local(j, party));
  }
  return dyads;
}

std::size_t dyad_span_rank(const StateSet& s, std::size_t party,
                           std::span<const IndexPair> pairs, double rank_tol) {
  const auto dyads = local_dyads(s, party, pairs);
  return numerical_rank(std::span<const Dyad>(dyads), rank_tol);
}

DyadCertificate certify(const StateSet& s, double tol) { return certify_impl(s, tol); }

DyadCertificate certify_cut(const StateSet& s, const PartyCut& cut, double tol) {
  cut.validate(s.parties());
  if (cut.blocks.size() < 2) {
    throw std::invalid_argument("certify_cut: the cut must have at least two blocks");
  }
  DyadCertificate cert = certify_impl(merge_cut(s, cut), tol);
  for (std::size_t b = 0; b < cert.parties.size(); ++b) cert.parties[b].members = cut.blocks[b];
  cert.cut = cut;
  return cert;
}

StrongNlweReport strong_nlwe(const StateSet& s, double tol) {
  if (s.parties() < 3) {
    throw std::invalid_argument("strong_nlwe: needs at least three parties (P = " +
                                std::to_string(s.parties()) + ")");
  }
  StrongNlweReport report;
  report.per_party = certify(s, tol);
  bool ok = report.per_party.verdict == Verdict::certified_indiscriminable;
  for (const PartyCut& cut : all_bipartitions(s.parties())) {
    report.cuts.push_back(certify_cut(s, cut, tol));
    ok = ok && report.cuts.back().verdict == Verdict::certified_indiscriminable;
  }
  report.verdict = ok ? StrongVerdict::certified : StrongVerdict::not_certified;
  return report;
}

std::size_t min_states_bound(std::span<const std::size_t> dims) {
  std::size_t total = 0;
  for (std::size_t d : dims) {
    if (d < 2) throw std::invalid_argument("min_states_bound: every dimension must be >= 2");
    total += d * d - 1;
  }
  std::size_t n = 1;
  while (n * (n - 1) < total) ++n;
  return n;
}

std::vector<Dyad> gentiles1_witness_dyads(std::size_t n) {
  if (n < 4 || n % 2 != 0) {
    throw std::invalid_argument("gentiles1_witness_dyads: n must be even and >= 4");
  }
  const Complex omega = families::gentiles1_omega(n);
  const std::size_t half = n / 2;
  auto h = [&](std::size_t k, std::size_t m) {
    Ket v = Ket::Zero(static_cast<Eigen::Index>(n));
    for (std::size_t j = 0; j < half; ++j) {
      v(static_cast<Eigen::Index>((j + k) % n)) += std::pow(omega, static_cast<double>(j * m));
    }
    return v;
  };
  const Ket f = Ket::Ones(static_cast<Eigen::Index>(n));
  auto e = [n](std::size_t i) { return basis_ket(n, i); };

  std::vector<Dyad> dyads;
  // |i><j|, j != i, i + n/2
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i || j == (i + half) % n) continue;
      dyads.emplace_back(e(i), e(j));
    }
  }
  // |f><h_0m|, |h_0m><f| for m = 1..n/2-1; the same for h_11; |f><h_k1| for k = 2..n/2
  for (std::size_t m = 1; m < half; ++m) {
    dyads.emplace_back(f, h(0, m));
    dyads.emplace_back(h(0, m), f);
  }
  dyads.emplace_back(f, h(1, 1));
  dyads.emplace_back(h(1, 1), f);
  for (std::size_t k = 2; k <= half; ++k) dyads.emplace_back(f, h(k, 1));
  // |h_11><h_1l| for l = 2..n/2-1, and |h_12><h_11|
  for (std::size_t l = 2; l < half; ++l) dyads.emplace_back(h(1, 1), h(1, l));
  dyads.emplace_back(h(1, 2), h(1, 1));
  // |h_01><n/2|
  dyads.emplace_back(h(0, 1), e(half));
  return dyads;
}

}  // namespace loccert
