#include "loccert/upb.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace loccert {

namespace {

constexpr double kSpanTolerance = 1e-8;

void require_product(const StateSet& s, const char* who) {
  if (!s.all_product()) {
    throw std::invalid_argument(std::string(who) + ": every member must be a product state");
  }
}

// Orthonormal basis of the span of one party's assigned kets, with undo.
class LocalSpan {
 public:
  explicit LocalSpan(std::size_t dim) : dim_(dim) {}

  /// Adds v; returns whether the span grew.
  bool push(const Ket& v) {
    Ket r = v;
    for (const Ket& b : basis_) r -= b.dot(r) * b;
    // Second pass keeps the basis orthonormal to working precision.
    for (const Ket& b : basis_) r -= b.dot(r) * b;
    const double n = r.norm();
    const bool grew = n > kSpanTolerance * v.norm();
    if (grew) basis_.push_back(r / n);
    grew_.push_back(grew);
    return grew;
  }
  void pop() {
    if (grew_.back()) basis_.pop_back();
    grew_.pop_back();
  }
  [[nodiscard]] std::size_t rank() const { return basis_.size(); }
  [[nodiscard]] std::size_t dim() const { return dim_; }

 private:
  std::size_t dim_;
  std::vector<Ket> basis_;
  std::vector<bool> grew_;
};

struct Search {
  const StateSet& s;
  std::vector<LocalSpan> spans;
  std::vector<std::size_t> owner;
  std::uint64_t nodes = 0;

  bool run(std::size_t member) {
    ++nodes;
    if (member == s.size()) return true;
    for (std::size_t a = 0; a < s.parties(); ++a) {
      spans[a].push(s.local(member, a));
      // Ranks never shrink, so a party at full rank ends this branch.
      if (spans[a].rank() < spans[a].dim()) {
        owner[member] = a;
        if (run(member + 1)) return true;
      }
      spans[a].pop();
    }
    return false;
  }
};

}  // namespace

ExtendibilityResult upb_extendibility(const StateSet& s, std::uint64_t budget) {
  require_product(s, "upb_extendibility");
  const double space =
      std::pow(static_cast<double>(s.parties()), static_cast<double>(s.size()));
  if (space > static_cast<double>(budget)) {
    throw EnumerationBudgetExceeded("upb_extendibility: P^N = " + std::to_string(s.parties()) +
                                    "^" + std::to_string(s.size()) + " exceeds the budget of " +
                                    std::to_string(budget) + " partitions");
  }
  Search search{s, {}, std::vector<std::size_t>(s.size(), 0), 0};
  for (std::size_t d : s.dims()) search.spans.emplace_back(d);

  ExtendibilityResult result;
  const bool found = search.run(0);
  result.nodes_visited = search.nodes;
  result.is_unextendible = !found;
  if (found) {
    StatePartition partition(s.parties());
    for (std::size_t m = 0; m < s.size(); ++m) partition[search.owner[m]].push_back(m);
    for (std::size_t a = 0; a < s.parties(); ++a) {
      result.witness_local_ranks.push_back(search.spans[a].rank());
    }
    result.witness = std::move(partition);
  }
  return result;
}

namespace {

std::size_t minimal_size(const StateSet& s) {
  std::size_t n = 1;
  for (std::size_t d : s.dims()) n += d - 1;
  return n;
}

// Visits every k-subset of {0..n-1}; stops early when `fn` returns false.
template <typename Fn>
bool for_each_subset(std::size_t n, std::size_t k, Fn&& fn) {
  if (k > n) return true;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    if (!fn(idx)) return false;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return true;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

bool minimal_upb_check(const StateSet& s) {
  require_product(s, "minimal_upb_check");
  if (s.size() != minimal_size(s)) return false;
  for (std::size_t a = 0; a < s.parties(); ++a) {
    const std::size_t d = s.dims()[a];
    const bool independent = for_each_subset(s.size(), d, [&](const std::vector<std::size_t>& idx) {
      std::vector<Ket> kets;
      kets.reserve(idx.size());
      for (std::size_t m : idx) kets.push_back(s.local(m, a));
      return numerical_rank(std::span<const Ket>(kets)) == d;
    });
    if (!independent) return false;
  }
  return true;
}

Verdict theorem2_check(const StateSet& s) {
  if (!minimal_upb_check(s)) return Verdict::inconclusive;
  for (std::size_t d : s.dims()) {
    if (s.size() < 2 * (d - 1) + 1) return Verdict::inconclusive;
  }
  return Verdict::certified_indiscriminable;
}

UpbReport analyze_upb(const StateSet& s, std::uint64_t budget) {
  UpbReport report;
  report.extendibility = upb_extendibility(s, budget);
  report.is_minimal = minimal_upb_check(s);
  report.theorem2 = theorem2_check(s);
  report.theorem2_applies = report.theorem2 == Verdict::certified_indiscriminable;
  report.minimal_size = minimal_size(s);
  const bool all_nontrivial =
      std::all_of(s.dims().begin(), s.dims().end(), [](std::size_t d) { return d >= 2; });
  report.min_states_bound = all_nontrivial ? min_states_bound(s.dims()) : 0;
  return report;
}

}  // namespace loccert
