#include "bipoisson/var.hpp"

#include <charconv>

#include "bipoisson/errors.hpp"

namespace bipoisson {

VarId VarId::coord(int i, int j) {
  if (i < 1 || j < 1 || i > kMaxDim || j > kMaxDim) {
    throw std::out_of_range("coordinate index out of range: S[" + std::to_string(i) + "," +
                            std::to_string(j) + "]");
  }
  return VarId(static_cast<std::uint16_t>(i * 64 + j));
}

VarId VarId::y(int alpha) {
  if (alpha < 0 || alpha > 9) throw std::out_of_range("y index out of range: " + std::to_string(alpha));
  return VarId(static_cast<std::uint16_t>(kY0 + alpha));
}

VarKind VarId::kind() const {
  if (code_ < kS0) return VarKind::Coordinate;
  if (code_ == kS0) return VarKind::Extension;
  if (code_ < kT) return VarKind::Y;
  if (code_ == kT) return VarKind::T;
  if (code_ == kA) return VarKind::A;
  return VarKind::Pencil;
}

std::string VarId::name() const {
  switch (kind()) {
    case VarKind::Coordinate:
      return "S[" + std::to_string(row()) + "," + std::to_string(col()) + "]";
    case VarKind::Extension:
      return "S0";
    case VarKind::Y:
      return "y" + std::to_string(index());
    case VarKind::T:
      return "t";
    case VarKind::A:
      return "a";
    case VarKind::Pencil:
      return "lambda";
  }
  return "?";
}

namespace {

int parse_int(std::string_view s, std::string_view whole) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw ParseError("malformed variable '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

VarId VarId::parse(std::string_view text) {
  if (text == "S0") return s0();
  if (text == "t") return t();
  if (text == "a") return a();
  if (text == "lambda") return pencil();
  try {
    if (text.size() >= 2 && text[0] == 'y') return y(parse_int(text.substr(1), text));
    if (text.size() >= 6 && text.starts_with("S[") && text.back() == ']') {
      auto inner = text.substr(2, text.size() - 3);
      auto comma = inner.find(',');
      if (comma != std::string_view::npos) {
        return coord(parse_int(inner.substr(0, comma), text), parse_int(inner.substr(comma + 1), text));
      }
    }
  } catch (const std::out_of_range&) {
    throw ParseError("variable out of range '" + std::string(text) + "'");
  }
  throw ParseError("unknown variable '" + std::string(text) + "'");
}

}  // namespace bipoisson
