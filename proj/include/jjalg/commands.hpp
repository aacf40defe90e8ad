#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "jjalg/algebra.hpp"
#include "jjalg/morphism.hpp"
#include "jjalg/report.hpp"

namespace jjalg::cli {

constexpr std::uint64_t kDefaultSeed = 0x5eed;

/// Reads and parses an algebra file; `field` overrides its `char` line.
Algebra load_algebra(const std::string &path, std::optional<Field> field = std::nullopt);
LinearMap load_matrix(const std::string &path, Field field = Field::rationals());
std::string read_file(const std::string &path);

/// Identity checks and nilpotency data. Exit status 1 unless the algebra is
/// commutative and satisfies the Jacobi identity.
Report cmd_check(const Algebra &a, std::uint64_t seed = kDefaultSeed);

Report cmd_invariants(const Algebra &a);

/// Fingerprint diff. The verdict is "distinct over any extension field" when
/// some invariant differs and "undetermined by invariants" otherwise.
Report cmd_compare(const Algebra &a, const Algebra &b);

/// Groebner basis, standard monomials and the algebra file of the maximal
/// ideal. Only "lex" is accepted as `order`.
Report cmd_quotient(const std::string &ideal, const std::vector<std::string> &vars = {},
                    const std::string &order = "lex");

Report cmd_catalog_list(std::optional<std::size_t> dim = std::nullopt);

/// Recomputes every entry's expected properties; exit status 1 on any
/// mismatch. Fingerprint collisions are reported and are failures only in
/// dimensions 1..4.
Report cmd_catalog_verify(std::optional<std::size_t> dim = std::nullopt);

/// Algebra files of one entry (`name`) or of every entry of `dim`.
Report cmd_catalog_export(std::optional<std::string> name,
                          std::optional<std::size_t> dim = std::nullopt);

/// Exit status 1 unless `f` is an isomorphism a -> b.
Report cmd_iso_verify(const LinearMap &f, const Algebra &a, const Algebra &b);

/// Exit status 1 when normalization fails.
Report cmd_normalize5(const Algebra &a, std::uint64_t seed = kDefaultSeed);

} // namespace jjalg::cli
