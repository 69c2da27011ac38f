#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string_view>

namespace esqkd {

/// The four Bell states: the protocol's measurement alphabet and 2-bit key
/// symbol. Canonical index and bit encoding:
///   Phi+ -> 0 -> 00, Phi- -> 1 -> 01, Psi+ -> 2 -> 10, Psi- -> 3 -> 11.
enum class BellLabel : std::uint8_t {
  PhiPlus = 0,
  PhiMinus = 1,
  PsiPlus = 2,
  PsiMinus = 3,
};

inline constexpr std::array<BellLabel, 4> kBellLabels = {
    BellLabel::PhiPlus, BellLabel::PhiMinus, BellLabel::PsiPlus,
    BellLabel::PsiMinus};

constexpr int bell_index(BellLabel l) { return static_cast<int>(l); }

constexpr BellLabel bell_from_index(int idx) {
  if (idx < 0 || idx > 3) throw std::invalid_argument("bell_from_index: index out of range");
  return static_cast<BellLabel>(idx);
}

/// Two-bit key encoding, most significant bit first.
constexpr std::array<int, 2> bell_bits(BellLabel l) {
  const int i = bell_index(l);
  return {(i >> 1) & 1, i & 1};
}

constexpr std::string_view bell_name(BellLabel l) {
  switch (l) {
    case BellLabel::PhiPlus: return "Phi+";
    case BellLabel::PhiMinus: return "Phi-";
    case BellLabel::PsiPlus: return "Psi+";
    case BellLabel::PsiMinus: return "Psi-";
  }
  throw std::invalid_argument("bell_name: bad label");
}

inline std::optional<BellLabel> bell_from_name(std::string_view name) {
  for (BellLabel l : kBellLabels)
    if (bell_name(l) == name) return l;
  return std::nullopt;
}

/// Amplitudes in the |00>,|01>,|10>,|11> basis.
inline const std::array<std::complex<double>, 4>& bell_amplitudes(BellLabel l) {
  static const double s = 0.7071067811865476;  // 1/sqrt(2)
  static const std::array<std::array<std::complex<double>, 4>, 4> table = {{
      {{s, 0.0, 0.0, s}},    // Phi+
      {{s, 0.0, 0.0, -s}},   // Phi-
      {{0.0, s, s, 0.0}},    // Psi+
      {{0.0, s, -s, 0.0}},   // Psi-
  }};
  return table[bell_index(l)];
}

}  // namespace esqkd
