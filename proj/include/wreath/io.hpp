#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "wreath/wdln.hpp"
#include "wreath/weakbialgebra.hpp"

namespace wreath {

/// Line-based structure-constant file. Blank lines and text after '#' are
/// ignored. Directives:
///   field rational | prime:p
///   dim d
///   shape d1 d2 ...          (optional, product must equal dim)
///   mul i j k v              e_i e_j contains v e_k
///   unit k v
///   comul i p q v            Delta e_i contains v e_p (x) e_q
///   counit i v
/// Values are integers or fractions a/b. Repeated index tuples are rejected.
struct AlgebraFile {
  Field field = Field::rational();
  Space space;
  std::optional<LinMap> mul;
  std::optional<LinMap> unit;
  std::optional<LinMap> comul;
  std::optional<LinMap> counit;
};

/// field_override replaces the field declared in the file. Throws ParseError.
AlgebraFile parse_algebra_file(std::istream& in, const std::string& origin,
                               std::optional<Field> field_override = std::nullopt);
AlgebraFile read_algebra_file(const std::string& path,
                              std::optional<Field> field_override = std::nullopt);

/// Throw ParseError when the needed sections are missing.
Algebra to_algebra(const AlgebraFile& f);
Coalgebra to_coalgebra(const AlgebraFile& f);
WeakBialgebra to_weak_bialgebra(const AlgebraFile& f, const std::string& name);

/// Writes every section that is present.
std::string format_algebra_file(const WeakBialgebra& h);

/// Map file: field, "domain d1 d2 ...", "codomain ...", "entry row col v".
LinMap parse_map_file(std::istream& in, const std::string& origin,
                      std::optional<Field> field_override = std::nullopt);
LinMap read_map_file(const std::string& path, std::optional<Field> field_override = std::nullopt);
std::string format_map_file(const LinMap& f);

/// Object manifest, either
///   spinchain NAME N [parity]
/// or
///   monad i SOURCE           SOURCE is a file path or builtin:NAME
///   law i j flip|PATH
/// Paths are relative to the manifest. Every monad and every law must be
/// given exactly once.
WdlNObject parse_manifest(std::istream& in, const std::string& origin, const std::string& base_dir,
                          std::optional<Field> field_override = std::nullopt);
WdlNObject read_manifest(const std::string& path,
                         std::optional<Field> field_override = std::nullopt);

/// Either builtin:NAME / a plain builtin name, or a path to an algebra file
/// with comultiplication.
WeakBialgebra load_bialgebra(const std::string& source,
                             std::optional<Field> field_override = std::nullopt);

}  // namespace wreath
