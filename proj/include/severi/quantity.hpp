#pragma once

#include <array>
#include <optional>
#include <string_view>

namespace severi {

/// The three recursively computed quantities.
enum class Quantity { SeveriDegree, LambdaDegree, BNumber };

inline constexpr std::array<Quantity, 3> kAllQuantities{Quantity::SeveriDegree, Quantity::LambdaDegree,
                                                        Quantity::BNumber};

/// Single-letter code used on the command line and in cache files.
constexpr std::string_view quantity_code(Quantity q) {
  switch (q) {
    case Quantity::SeveriDegree: return "N";
    case Quantity::LambdaDegree: return "L";
    case Quantity::BNumber: return "B";
  }
  return "?";
}

constexpr std::optional<Quantity> parse_quantity(std::string_view code) {
  if (code == "N") return Quantity::SeveriDegree;
  if (code == "L") return Quantity::LambdaDegree;
  if (code == "B") return Quantity::BNumber;
  return std::nullopt;
}

}  // namespace severi
