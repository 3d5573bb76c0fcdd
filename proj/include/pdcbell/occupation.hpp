#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <string>
#include <string_view>

namespace pdcbell {

inline constexpr int kNumModes = 4;

// The four labeled modes, in storage order.
enum class Mode : int { a1 = 0, a2 = 1, b1 = 2, b2 = 3 };

constexpr int mode_index(Mode m) { return static_cast<int>(m); }
std::string_view mode_name(Mode m);

/// Photon numbers of the four modes, ordered (a1, a2, b1, b2).
struct Occupation {
  std::array<int, kNumModes> n{0, 0, 0, 0};

  int operator[](Mode m) const { return n[static_cast<std::size_t>(mode_index(m))]; }
  int& operator[](Mode m) { return n[static_cast<std::size_t>(mode_index(m))]; }
  int total() const { return n[0] + n[1] + n[2] + n[3]; }

  /// Station swap (a1,a2,b1,b2) -> (b2,b1,a2,a1). Exchanges Alice's and
  /// Bob's modes while keeping the phase plate on the swapped station's
  /// phase-carrying mode.
  Occupation mirrored() const { return Occupation{{n[3], n[2], n[1], n[0]}}; }

  std::string str() const;
  static Occupation parse(std::string_view text);

  auto operator<=>(const Occupation&) const = default;
};

}  // namespace pdcbell
