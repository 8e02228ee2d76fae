#pragma once

#include <string>

#include "liftforge/derived.hpp"
#include "liftforge/group.hpp"
#include "liftforge/matroid.hpp"

namespace liftforge {

struct NamedMatroid {
  std::string name;
  Matroid matroid;
};

/// Parses the matroid text format:
///   # comments and blank lines are ignored
///   matroid <name>
///   uniform r=<a> n=<b> | free n=<k> | zero n=<k>
///   | graphic n=<vertices> edges=<u1-v1,u2-v2,...>      (1-based, repeats ok)
///   | linear p=<prime> k=<ext> rows=<r> cols=<m> data=<row-major ints>
///   | bases rank=<r> [n=<size>] sets={0,1},{0,2},...
/// Throws ParseError with a line number on malformed input; constructor
/// validation failures (bad bases, bad matrix) surface as ValidationError.
NamedMatroid parse_matroid_text(const std::string& text);

/// Loads from a file path; a string containing '=' but naming no file is
/// treated as an inline definition line (with a default name).
NamedMatroid load_matroid(const std::string& path_or_inline);

/// Loads a `linear ...` spec as a representation (matrix plus its column
/// matroid); other matroid kinds carry no matrix and are rejected.
Representation load_representation(const std::string& path_or_inline);

/// Parses the Cayley group file format:
///   group <name>
///   order <m>
///   table
///   <m rows of m indices>        (identity must be index 0)
FiniteGroup parse_group_text(const std::string& text);

/// A file path, or an inline group name like Z2, Z2xZ4, S3, trivial.
FiniteGroup load_group(const std::string& name_or_path);

/// Deterministic description: ground size, rank, canonical circuit list, and
/// (ground <= 12) the rank table hash.
std::string show_matroid(const NamedMatroid& nm);

/// A "bases rank=... sets=..." definition line reproducing the matroid;
/// usable as input wherever a matroid spec is accepted.
std::string bases_line(const Matroid& m);

}  // namespace liftforge
