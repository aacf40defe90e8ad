#pragma once

#include <cstdint>
#include <optional>

#include "jjalg/algebra.hpp"
#include "jjalg/gl_scan.hpp"
#include "jjalg/morphism.hpp"

namespace jjalg {

/// Reduces an algebra with integer structure constants (over Q, or already
/// over F_p) to a GL-scan operand. Throws std::invalid_argument on
/// non-integer constants or a dimension outside 1..3.
gl::Problem make_gl_problem(const Algebra &a, const Algebra &b, std::uint64_t p);

/// Exhaustive search over GL(n, F_p) for an isomorphism a -> b, n <= 3.
/// Returns the first witness in scan order (a LinearMap over F_p) or nullopt
/// when no isomorphism exists over F_p. This says nothing definitive about
/// isomorphism over Q or its algebraic closure; it is an oracle heuristic.
std::optional<LinearMap> brute_force_isomorphic(const Algebra &a, const Algebra &b,
                                                std::uint64_t p,
                                                gl::Kernel kernel = gl::Kernel::Auto);

} // namespace jjalg
