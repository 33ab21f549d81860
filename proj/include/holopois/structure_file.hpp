#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "holopois/poisson.hpp"

namespace holopois {

// Line-oriented definition of a bivector:
//
//   # comment
//   chart: w, z
//   weights: 1, 1            (optional, defaults to all 1)
//   poisson:
//     {w, z} = w*z           (pairs listed in chart order, each at most once)
//
// The poisson block holds either bracket lines or one builder line:
//   jacobian3 F = <expr>     (3-chart)
//   diagonal lambda = r11, r12, ...; r21, ...   (rows separated by ';')
//
// Unlisted pairs are zero. Errors are ParseError with 1-based line and column.
struct StructureDefinition {
  enum class Kind { Brackets, Jacobian3, Diagonal };

  ChartPtr chart;
  Kind kind = Kind::Brackets;
  Polyvector bivector;
  std::optional<Poly> casimir;          // Jacobian3
  std::optional<RationalMatrix> lambda;  // Diagonal
};

StructureDefinition parse_structure(std::string_view text);
StructureDefinition load_structure(const std::string& path);

/// Bracket-form text that parses back to the same bivector.
std::string serialize_structure(const StructureDefinition& def);

}  // namespace holopois
