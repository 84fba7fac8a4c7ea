#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

namespace bipoisson {

enum class VarKind : std::uint8_t {
  Coordinate,  // S_ij
  Extension,   // S0
  Y,           // y_0 .. y_9
  T,
  A,
  Pencil,      // fresh pencil parameter of compatibility checks
};

/// Identifier of a polynomial variable.
///
/// The total order is the order of the packed code: coordinates S_ij first,
/// ordered lexicographically by (i, j), then S0, then y0 < ... < y9 < t < a
/// < lambda. Canonical polynomial term order and serialization depend on it.
class VarId {
 public:
  static constexpr int kMaxDim = 63;

  static VarId coord(int i, int j);
  static VarId s0() { return VarId(kS0); }
  static VarId y(int alpha);
  static VarId t() { return VarId(kT); }
  static VarId a() { return VarId(kA); }
  static VarId pencil() { return VarId(kPencil); }

  /// Inverse of name(); throws ParseError.
  static VarId parse(std::string_view text);

  VarKind kind() const;
  bool is_coordinate() const { return code_ <= kS0; }
  bool is_parameter() const { return code_ > kS0; }
  /// Row and column of an S_ij coordinate.
  int row() const { return code_ / 64; }
  int col() const { return code_ % 64; }
  /// Index of a y_alpha parameter.
  int index() const { return code_ - kY0; }

  std::uint16_t code() const { return code_; }
  std::string name() const;

  friend auto operator<=>(const VarId&, const VarId&) = default;

 private:
  static constexpr std::uint16_t kS0 = 64 * 64;
  static constexpr std::uint16_t kY0 = kS0 + 1;
  static constexpr std::uint16_t kT = kY0 + 10;
  static constexpr std::uint16_t kA = kT + 1;
  static constexpr std::uint16_t kPencil = kA + 1;

  explicit VarId(std::uint16_t code) : code_(code) {}
  std::uint16_t code_;
};

}  // namespace bipoisson

template <>
struct std::hash<bipoisson::VarId> {
  std::size_t operator()(const bipoisson::VarId& v) const noexcept { return v.code(); }
};
