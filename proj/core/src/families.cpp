#include "loccert/families.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace loccert::families {

namespace {

Ket ket3(Complex a, Complex b, Complex c) {
  Ket k(3);
  k << a, b, c;
  return k;
}

Ket e(std::size_t dim, std::size_t i) { return basis_ket(dim, i); }

}  // namespace

StateSet rotated_dominoes(const std::array<double, 4>& theta) {
  for (std::size_t j = 0; j < 4; ++j) {
    if (!(theta[j] > 0.0 && theta[j] <= std::numbers::pi / 4 + 1e-15)) {
      throw std::invalid_argument("rotated_dominoes: theta_" + std::to_string(j + 1) +
                                  " = " + std::to_string(theta[j]) + " outside (0, pi/4]");
    }
  }
  const double c1 = std::cos(theta[0]), s1 = std::sin(theta[0]);
  const double c2 = std::cos(theta[1]), s2 = std::sin(theta[1]);
  const double c3 = std::cos(theta[2]), s3 = std::sin(theta[2]);
  const double c4 = std::cos(theta[3]), s4 = std::sin(theta[3]);
  std::vector<std::vector<Ket>> states = {
      {e(3, 1), e(3, 1)},
      {e(3, 0), ket3(c1, s1, 0)},
      {e(3, 0), ket3(s1, -c1, 0)},
      {ket3(c2, s2, 0), e(3, 2)},
      {ket3(s2, -c2, 0), e(3, 2)},
      {e(3, 2), ket3(0, c3, s3)},
      {e(3, 2), ket3(0, s3, -c3)},
      {ket3(0, c4, s4), e(3, 0)},
      {ket3(0, s4, -c4), e(3, 0)},
  };
  return StateSet::from_products({3, 3}, std::move(states));
}

StateSet tiles() {
  std::vector<std::vector<Ket>> states = {
      {ket3(1, 1, 1), ket3(1, 1, 1)},
      {e(3, 0), ket3(1, -1, 0)},
      {ket3(1, -1, 0), e(3, 2)},
      {e(3, 2), ket3(0, 1, -1)},
      {ket3(0, 1, -1), e(3, 0)},
  };
  return StateSet::from_products({3, 3}, std::move(states));
}

StateSet halder(HalderVariant variant) {
  // |j +- k> = (|j> +- |k>)/sqrt2, normalized by MemberState.
  auto pm = [](std::size_t j, std::size_t k, double sign) {
    Ket v = Ket::Zero(3);
    v(static_cast<Eigen::Index>(j)) = 1.0;
    v(static_cast<Eigen::Index>(k)) = sign;
    return v;
  };
  struct Seed {
    std::size_t a, b, j, k;  // |a>|b>|j +- k>
  };
  const Seed seeds[4] = {{0, 1, 0, 1}, {0, 2, 0, 2}, {1, 2, 0, 1}, {2, 1, 0, 2}};

  std::vector<std::vector<Ket>> permuted;  // index 2*(label-1) + (sign == -)
  for (const Seed& s : seeds) {
    for (int rot = 0; rot < 3; ++rot) {
      for (double sign : {1.0, -1.0}) {
        std::vector<Ket> locals = {e(3, s.a), e(3, s.b), pm(s.j, s.k, sign)};
        for (int r = 0; r < rot; ++r) {
          // (a, b, c) -> (b, c, a)
          std::rotate(locals.begin(), locals.begin() + 1, locals.end());
        }
        permuted.push_back(std::move(locals));
      }
    }
  }

  std::vector<std::vector<Ket>> states;
  switch (variant) {
    case HalderVariant::full:
      states = permuted;
      for (std::size_t i = 0; i < 3; ++i) states.push_back({e(3, i), e(3, i), e(3, i)});
      break;
    case HalderVariant::omit_diag24:
      states = permuted;
      break;
    case HalderVariant::reduced12:
      for (std::size_t label : {1, 2, 3, 10, 11, 12}) {
        states.push_back(permuted[2 * (label - 1)]);
        states.push_back(permuted[2 * (label - 1) + 1]);
      }
      break;
  }
  return StateSet::from_products({3, 3, 3}, std::move(states));
}

Complex gentiles1_omega(std::size_t n) {
  return std::polar(1.0, 4.0 * std::numbers::pi / static_cast<double>(n));
}

StateSet gentiles1(std::size_t n) {
  if (n < 4 || n % 2 != 0) {
    throw std::invalid_argument("gentiles1: n must be even and >= 4 (got " + std::to_string(n) +
                                ")");
  }
  const Complex omega = gentiles1_omega(n);
  const std::size_t half = n / 2;
  // sum_{j=0}^{n/2-1} omega^{jm} |j + shift mod n>
  auto stripe = [&](std::size_t shift, std::size_t m) {
    Ket v = Ket::Zero(static_cast<Eigen::Index>(n));
    for (std::size_t j = 0; j < half; ++j) {
      v(static_cast<Eigen::Index>((j + shift) % n)) +=
          std::pow(omega, static_cast<double>(j * m));
    }
    return v;
  };
  std::vector<std::vector<Ket>> states;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t m = 1; m < half; ++m) states.push_back({e(n, k), stripe(k + 1, m)});
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t m = 1; m < half; ++m) states.push_back({stripe(k, m), e(n, k)});
  }
  const Ket flat = Ket::Ones(static_cast<Eigen::Index>(n));
  states.push_back({flat, flat});
  return StateSet::from_products({n, n}, std::move(states));
}

StateSet bell_states() {
  const double r = 1.0 / std::numbers::sqrt2;
  Ket phi_p(4), phi_m(4), psi_p(4), psi_m(4);
  phi_p << r, 0, 0, r;
  phi_m << r, 0, 0, -r;
  psi_p << 0, r, r, 0;
  psi_m << 0, r, -r, 0;
  std::vector<MemberState> members = {MemberState::entangled(phi_p), MemberState::entangled(phi_m),
                                      MemberState::entangled(psi_p), MemberState::entangled(psi_m)};
  return StateSet({2, 2}, std::move(members), {0.25, 0.25, 0.25, 0.25});
}

StateSet two_qubit_demo() {
  Ket plus(2), minus(2);
  plus << 1, 1;
  minus << 1, -1;
  std::vector<std::vector<Ket>> states = {
      {e(2, 0), e(2, 0)},
      {e(2, 0), e(2, 1)},
      {e(2, 1), plus},
      {e(2, 1), minus},
  };
  return StateSet::from_products({2, 2}, std::move(states));
}

}  // namespace loccert::families
