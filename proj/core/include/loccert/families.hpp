#pragma once

#include <array>
#include <cstddef>
#include <string_view>

#include "loccert/state_set.hpp"

/// Generators for the named state families. All return uniform priors.
namespace loccert::families {

/// Nine rotated domino states on 3x3. Each angle must lie in (0, pi/4];
/// all angles pi/4 gives the unrotated dominoes.
[[nodiscard]] StateSet rotated_dominoes(const std::array<double, 4>& theta);

/// The five-member Tiles UPB on 3x3: F and the dominoes 3, 5, 7, 9.
[[nodiscard]] StateSet tiles();

enum class HalderVariant { full, reduced12, omit_diag24 };

/// Tripartite 3x3x3 set built from four seed pairs and their cyclic
/// permutations (plus |iii> in the full variant).
///
/// Member 3j+k (k = 1, 2, 3) is seed j with its local kets rotated k-1 times,
/// where one rotation maps (a, b, c) to (b, c, a). This reproduces the worked
/// example Psi_2+ = |2>|1+2>|1>. Labels |1>,|2>,|3> map to indices 0,1,2.
/// Order within the set: Psi_1+, Psi_1-, Psi_2+, ..., Psi_12-, then |iii>.
[[nodiscard]] StateSet halder(HalderVariant variant);

/// GenTiles1 UPB on n x n for even n >= 4: V_km, H_km (m = 1..n/2-1,
/// k = 0..n-1) and F, with omega = exp(4 pi i / n). N = n(n-2)+1.
/// Order: all V_km (k outer, m inner), then all H_km, then F.
[[nodiscard]] StateSet gentiles1(std::size_t n);

/// Phase omega = exp(4 pi i / n) used by gentiles1.
[[nodiscard]] Complex gentiles1_omega(std::size_t n);

/// The four Bell states (entangled members), priors 1/4.
[[nodiscard]] StateSet bell_states();

/// {|0>|0>, |0>|1>, |1>|+>, |1>|->}: locally distinguishable control set.
[[nodiscard]] StateSet two_qubit_demo();

}  // namespace loccert::families
