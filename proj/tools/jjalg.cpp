#include <cctype>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "jjalg/algebra_file.hpp"
#include "jjalg/catalog.hpp"
#include "jjalg/commands.hpp"

namespace {

using jjalg::ExitStatus;
using jjalg::Report;

int emit(const Report &r, const std::string &format) {
  std::cout << (format == "machine" ? r.to_json() : r.to_text());
  return static_cast<int>(r.status);
}

int input_error(const std::string &command, const std::string &msg, const std::string &format) {
  if (format == "machine") {
    Report r;
    r.command = command;
    r.status = ExitStatus::InputError;
    r.notes.push_back("error: " + msg);
    std::cout << r.to_json();
  }
  std::cerr << "jjalg " << command << ": " << msg << "\n";
  return static_cast<int>(ExitStatus::InputError);
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Exact toolkit for finite-dimensional commutative nonassociative algebras"};
  app.require_subcommand(1);

  std::string field_text, format = "text";
  std::uint64_t seed = jjalg::cli::kDefaultSeed;
  app.add_option("--field", field_text, "Ground field: q or fp:<p> (overrides the file's char)");
  app.add_option("--seed", seed, "Seed for randomized witness searches");
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "machine"}));

  std::string file_a, file_b, matrix_file;

  auto *check = app.add_subcommand("check", "Identity checks, nilpotency and nilindex");
  check->add_option("file", file_a, "Algebra file")->required();

  auto *inv = app.add_subcommand("invariants", "Fingerprint of invariants");
  inv->add_option("file", file_a, "Algebra file")->required();

  auto *cmp = app.add_subcommand("compare", "Compare fingerprints of two algebras");
  cmp->add_option("a", file_a, "Algebra file")->required();
  cmp->add_option("b", file_b, "Algebra file")->required();

  std::string ideal, vars_text, order = "lex";
  auto *quot = app.add_subcommand("quotient", "Maximal ideal of Q[vars]/I as an algebra file");
  quot->add_option("ideal", ideal, "Ideal generators, e.g. \"(xy,yz,z^2,y^2-xz,x^3)\"")->required();
  quot->add_option("--vars", vars_text, "Comma-separated variables, largest first");
  quot->add_option("--order", order, "Monomial order (lex)");

  auto *cat = app.add_subcommand("catalog", "Registry of classified algebras");
  std::string action, entry_name, out_dir;
  std::optional<std::size_t> dim;
  cat->add_option("action", action, "list | verify | export")
      ->required()
      ->check(CLI::IsMember({"list", "verify", "export"}));
  cat->add_option("--dim", dim, "Restrict to one dimension");
  cat->add_option("--name", entry_name, "Export a single entry");
  cat->add_option("--out-dir", out_dir, "Export: write one .alg file per entry here");

  auto *iso = app.add_subcommand("iso-verify", "Check that a matrix is an isomorphism a -> b");
  iso->add_option("matrix", matrix_file, "Matrix file")->required();
  iso->add_option("a", file_a, "Domain algebra file")->required();
  iso->add_option("b", file_b, "Codomain algebra file")->required();

  auto *norm = app.add_subcommand("normalize5", "Normal form of a 5-dim algebra with A^3 != 0");
  norm->add_option("file", file_a, "Algebra file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? 0 : static_cast<int>(ExitStatus::InputError);
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    std::optional<jjalg::Field> field;
    if (!field_text.empty())
      field = jjalg::Field::parse(field_text);
    const jjalg::Field ground = field.value_or(jjalg::Field::rationals());

    if (*check)
      return emit(jjalg::cli::cmd_check(jjalg::cli::load_algebra(file_a, field), seed), format);
    if (*inv)
      return emit(jjalg::cli::cmd_invariants(jjalg::cli::load_algebra(file_a, field)), format);
    if (*cmp)
      return emit(jjalg::cli::cmd_compare(jjalg::cli::load_algebra(file_a, field),
                                          jjalg::cli::load_algebra(file_b, field)),
                  format);
    if (*quot) {
      std::vector<std::string> vars;
      if (!vars_text.empty()) {
        std::string cur;
        for (char c : vars_text + ",") {
          if (c == ',') {
            if (!cur.empty())
              vars.push_back(cur);
            cur.clear();
          } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur += c;
          }
        }
      }
      if (field && !field->is_rational())
        throw std::invalid_argument("quotient is computed over q only");
      return emit(jjalg::cli::cmd_quotient(ideal, vars, order), format);
    }
    if (*cat) {
      if (action == "list")
        return emit(jjalg::cli::cmd_catalog_list(dim), format);
      if (action == "verify")
        return emit(jjalg::cli::cmd_catalog_verify(dim), format);
      std::optional<std::string> name;
      if (!entry_name.empty())
        name = entry_name;
      Report r = jjalg::cli::cmd_catalog_export(name, dim);
      if (!out_dir.empty()) {
        std::filesystem::create_directories(out_dir);
        std::vector<const jjalg::catalog::Entry *> entries;
        if (name)
          entries.push_back(&jjalg::catalog::get(*name));
        else
          entries = jjalg::catalog::list(dim);
        for (std::size_t i = 0; i < entries.size(); ++i) {
          auto path = std::filesystem::path(out_dir) / r.findings[i].verdict;
          std::ofstream(path) << jjalg::export_algebra_file(entries[i]->algebra, entries[i]->name);
        }
        r.payload.clear();
      }
      return emit(r, format);
    }
    if (*iso)
      return emit(jjalg::cli::cmd_iso_verify(jjalg::cli::load_matrix(matrix_file, ground),
                                             jjalg::cli::load_algebra(file_a, field),
                                             jjalg::cli::load_algebra(file_b, field)),
                  format);
    if (*norm)
      return emit(jjalg::cli::cmd_normalize5(jjalg::cli::load_algebra(file_a, field), seed),
                  format);
  } catch (const std::exception &e) {
    return input_error(command, e.what(), format);
  }
  return static_cast<int>(ExitStatus::InputError);
}
