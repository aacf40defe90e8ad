#pragma once

#include <optional>
#include <string>

#include "jjalg/algebra.hpp"
#include "jjalg/morphism.hpp"
#include "jjalg/parse_error.hpp"

namespace jjalg {

/// Line-based algebra description:
///
///   # comment
///   dim 5
///   char 0            (or a prime p >= 5; also "q" and "fp:<p>")
///   labels a b c d e  (optional)
///   symmetric         (mirror every product line to eJ*eI)
///   e1*e1 = e2
///   e1*e5 = -1/2 e3 + 2*e4
///
/// Unlisted products are zero. `dim` must precede product lines. Errors
/// throw ParseError with the offending line. `field` overrides `char`.
Algebra parse_algebra_file(const std::string &text, std::optional<Field> field = std::nullopt);

/// Inverse of parse_algebra_file. Emits `symmetric` and the upper triangle
/// when the algebra is commutative. `title` becomes a leading comment.
std::string export_algebra_file(const Algebra &a, const std::string &title = {});

/// Square matrix file:
///
///   convention columns-are-images   (or rows-are-images)
///   rows 6
///   2 0 0 0 0 0
///   ...
///
/// The result always uses the column convention.
LinearMap parse_matrix_file(const std::string &text, Field field = Field::rationals());

std::string export_matrix_file(const LinearMap &f);

} // namespace jjalg
