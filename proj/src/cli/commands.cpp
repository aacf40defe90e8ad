#include "jjalg/commands.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "jjalg/algebra_file.hpp"
#include "jjalg/catalog.hpp"
#include "jjalg/groebner.hpp"
#include "jjalg/identity.hpp"
#include "jjalg/invariants.hpp"
#include "jjalg/normalize.hpp"
#include "jjalg/structure.hpp"

namespace jjalg::cli {

namespace {

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string basis_name(const Algebra &a, std::size_t i) { return a.labels().at(i); }

std::string pair_witness(const Algebra &a, std::pair<std::size_t, std::size_t> w) {
  return "(" + basis_name(a, w.first) + ", " + basis_name(a, w.second) + ")";
}

/// "(e1, e3, e3)" for basis tuples; grouped braces for repeated variables.
std::string identity_witness(const Algebra &a, const IdentityCheck &r) {
  if (!r.witness)
    return {};
  std::string out = "(";
  bool first = true;
  for (const auto &group : *r.witness) {
    if (!first)
      out += ", ";
    first = false;
    if (group.size() == 1) {
      out += basis_name(a, group[0]);
      continue;
    }
    out += "{";
    for (std::size_t i = 0; i < group.size(); ++i)
      out += (i ? "," : "") + basis_name(a, group[i]);
    out += "}";
  }
  return out + ") -> " + format_vector(r.value, a.labels());
}

std::string join(const std::vector<std::size_t> &v, const std::string &sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i)
    out += (i ? sep : "") + std::to_string(v[i]);
  return out;
}

std::string opt_count(const std::optional<std::size_t> &v) {
  return v ? std::to_string(*v) : "none";
}

bool cube_zero(const PowerChain &pc) { return pc.powers.size() < 3 || pc.powers[2].dim() == 0; }

std::string sanitize(const std::string &name) {
  std::string out;
  for (char c : name) {
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '_')
      out += c;
    else if (c == '+')
      out += "_plus_";
    else if (c == '^')
      out += "_pow";
    else if (c == ',' || c == '(')
      out += "_";
  }
  return out;
}

} // namespace

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw std::invalid_argument("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Algebra load_algebra(const std::string &path, std::optional<Field> field) {
  try {
    return parse_algebra_file(read_file(path), field);
  } catch (const ParseError &e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

LinearMap load_matrix(const std::string &path, Field field) {
  try {
    return parse_matrix_file(read_file(path), field);
  } catch (const ParseError &e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

Report cmd_check(const Algebra &a, std::uint64_t seed) {
  Report r;
  r.command = "check";
  r.add("dimension", std::to_string(a.dim()));
  r.add("field", a.field().to_string());

  auto comm = is_commutative(a);
  r.add("commutative", yes_no(comm.commutative),
        comm.witness ? pair_witness(a, *comm.witness) : "");

  auto guarded = [&](const std::string &name, auto &&fn) {
    try {
      fn();
    } catch (const std::domain_error &e) {
      r.add(name, "skipped", e.what());
    }
  };

  bool jacobi = false;
  guarded("jacobi", [&] {
    auto j = is_jacobi(a);
    jacobi = j.holds;
    r.add("jacobi", yes_no(j.holds), identity_witness(a, j));
  });
  guarded("jordan", [&] {
    auto j = is_jordan(a);
    r.add("jordan", yes_no(j.holds), identity_witness(a, j));
  });
  {
    auto s = is_associative(a);
    r.add("associative", yes_no(s.holds), identity_witness(a, s));
  }
  guarded("power-associative", [&] {
    auto pa = is_power_associative(a);
    std::string w = "checked i + j <= " + std::to_string(pa.max_degree);
    if (pa.failing)
      w = "x^" + std::to_string(pa.failing->first) + " * x^" +
          std::to_string(pa.failing->second) + " at " + identity_witness(a, pa.detail);
    r.add("power-associative", yes_no(pa.holds) + " (bounded)", w);
  });

  auto pc = power_chain(a);
  std::vector<std::size_t> dims;
  for (const auto &s : pc.powers)
    dims.push_back(s.dim());
  auto nil = is_nilpotent(a);
  r.add("nilpotent", yes_no(nil.nilpotent),
        nil.nilpotency_class ? "class " + std::to_string(*nil.nilpotency_class) : "");
  r.add("power chain dims", "(" + join(dims) + ")");
  r.add("A^3 = 0", yes_no(cube_zero(pc)));
  r.add("solvable", yes_no(is_solvable(a)));

  guarded("nilindex", [&] {
    auto ni = nilindex(a, seed);
    if (!ni.found) {
      r.add("nilindex", "none", "not a nilalgebra up to x^" + std::to_string(a.dim() + 2));
      return;
    }
    std::string w;
    if (ni.index >= 2)
      w = "x = " + format_vector(ni.witness, a.labels()) + ", x^" +
          std::to_string(ni.index - 1) + " = " +
          format_vector(principal_power(a, ni.witness, ni.index - 1), a.labels());
    r.add("nilindex", std::to_string(ni.index), w);
  });

  const bool jj = comm.commutative && jacobi;
  r.add("jacobi-jordan", yes_no(jj));
  r.status = jj ? ExitStatus::Success : ExitStatus::CheckFailed;
  return r;
}

Report cmd_invariants(const Algebra &a) {
  Report r;
  r.command = "invariants";
  auto fp = fingerprint(a);
  r.add("dim", std::to_string(fp.dim));
  r.add("dims_power_chain", "(" + join(fp.dims_power_chain) + ")");
  r.add("nilpotency_class", opt_count(fp.nilpotency_class));
  r.add("nilindex", opt_count(fp.nilindex));
  r.add("dim_annihilator", std::to_string(fp.dim_annihilator));
  r.add("dim_derivations", std::to_string(fp.dim_derivations));
  r.add("associative", yes_no(fp.associative));
  r.notes.push_back("fingerprint: " + to_string(fp));
  return r;
}

Report cmd_compare(const Algebra &a, const Algebra &b) {
  Report r;
  r.command = "compare";
  auto fa = fingerprint(a), fb = fingerprint(b);
  auto diff = fingerprint_diff(fa, fb);
  auto row = [&](const std::string &name, const std::string &x, const std::string &y) {
    const bool differs = std::find(diff.begin(), diff.end(), name) != diff.end();
    r.add(name, x + " | " + y, differs ? "differs" : "");
  };
  row("dim", std::to_string(fa.dim), std::to_string(fb.dim));
  row("dims_power_chain", "(" + join(fa.dims_power_chain) + ")",
      "(" + join(fb.dims_power_chain) + ")");
  row("nilpotency_class", opt_count(fa.nilpotency_class), opt_count(fb.nilpotency_class));
  row("nilindex", opt_count(fa.nilindex), opt_count(fb.nilindex));
  row("dim_annihilator", std::to_string(fa.dim_annihilator), std::to_string(fb.dim_annihilator));
  row("dim_derivations", std::to_string(fa.dim_derivations), std::to_string(fb.dim_derivations));
  row("associative", yes_no(fa.associative), yes_no(fb.associative));
  r.add("verdict", diff.empty() ? "undetermined by invariants" : "distinct over any extension field");
  return r;
}

Report cmd_quotient(const std::string &ideal, const std::vector<std::string> &vars,
                    const std::string &order) {
  if (order != "lex")
    throw std::invalid_argument("unsupported monomial order '" + order + "' (only lex)");
  Report r;
  r.command = "quotient";
  auto id = poly::parse_ideal(ideal, vars);
  auto gb = poly::buchberger(id.generators);
  auto q = poly::quotient_algebra(gb);
  auto m = poly::maximal_ideal_algebra(q);

  std::string vlist;
  for (const auto &v : id.ring->variables)
    vlist += (vlist.empty() ? "" : " > ") + v;
  r.add("variables", vlist);
  for (std::size_t i = 0; i < gb.polynomials.size(); ++i)
    r.add("groebner[" + std::to_string(i + 1) + "]", gb.polynomials[i].to_string());
  std::string basis;
  for (const auto &mono : q.basis)
    basis += (basis.empty() ? "" : ", ") + id.ring->format(mono);
  r.add("standard monomials", "{" + basis + "}");
  r.add("quotient dim", std::to_string(q.basis.size()));
  r.add("algebra dim", std::to_string(m.dim()));

  auto fp = fingerprint(m);
  std::string matches;
  for (const auto *e : catalog::list(m.dim(), true))
    if (fingerprint(e->algebra) == fp)
      matches += (matches.empty() ? "" : ", ") + e->name;
  r.add("catalog fingerprint match", matches.empty() ? "none" : matches);
  std::string ring;
  for (const auto &v : id.ring->variables)
    ring += (ring.empty() ? "" : ",") + v;
  r.payload = export_algebra_file(m, "maximal ideal of Q[" + ring + "]/" + ideal);
  return r;
}

Report cmd_catalog_list(std::optional<std::size_t> dim) {
  Report r;
  r.command = "catalog list";
  for (const auto *e : catalog::list(dim))
    r.add(e->name, "dim " + std::to_string(e->dim()), e->source);
  return r;
}

Report cmd_catalog_verify(std::optional<std::size_t> dim) {
  Report r;
  r.command = "catalog verify";
  auto entries = catalog::list(dim);
  std::sort(entries.begin(), entries.end(),
            [](const auto *x, const auto *y) { return x->name < y->name; });

  bool all_ok = true;
  std::map<std::string, Fingerprint> fps;
  for (const auto *e : entries) {
    const Algebra &a = e->algebra;
    const auto &ex = e->expected;
    std::vector<std::string> bad;
    auto expect = [&](const std::string &what, bool want, bool got) {
      if (want != got)
        bad.push_back(what + " (expected " + yes_no(want) + ", got " + yes_no(got) + ")");
    };
    expect("commutative", true, is_commutative(a).commutative);
    const bool jacobi = is_jacobi(a).holds;
    expect("jacobi", ex.jacobi_jordan, jacobi);
    if (ex.jacobi_jordan)
      expect("jordan", true, is_jordan(a).holds);
    expect("associative", ex.associative, is_associative(a).holds);
    auto pc = power_chain(a);
    expect("A^3 = 0", ex.cube_zero, cube_zero(pc));
    expect("nilpotent", ex.jacobi_jordan, is_nilpotent(a).nilpotent);
    auto ni = nilindex(a);
    if (!ni.found || ni.index != ex.nilindex)
      bad.push_back("nilindex (expected " + std::to_string(ex.nilindex) + ", got " +
                    (ni.found ? std::to_string(ni.index) : "none") + ")");
    if (!e->summands.empty()) {
      Algebra sum = catalog::get(e->summands[0]).algebra;
      for (std::size_t i = 1; i < e->summands.size(); ++i)
        sum = direct_sum(sum, catalog::get(e->summands[i]).algebra);
      if (!(sum == a))
        bad.push_back("direct sum of summands differs");
    }
    auto fp = fingerprint(a);
    if (e->ideal_spec) {
      auto id = poly::parse_ideal(*e->ideal_spec);
      auto m = poly::maximal_ideal_algebra(poly::quotient_algebra(poly::buchberger(id.generators)));
      if (!(fingerprint(m) == fp))
        bad.push_back("ideal pipeline fingerprint differs");
    }
    if (e->classification)
      fps.emplace(e->name, fp);

    std::string verdict = bad.empty() ? "ok" : "mismatch";
    std::string witness = bad.empty() ? to_string(fp) : "";
    for (std::size_t i = 0; i < bad.size(); ++i)
      witness += (i ? "; " : "") + bad[i];
    r.add(e->name, verdict, witness, bad.empty());
    all_ok = all_ok && bad.empty();
  }

  for (auto i = fps.begin(); i != fps.end(); ++i)
    for (auto j = std::next(i); j != fps.end(); ++j) {
      if (!(i->second == j->second))
        continue;
      const bool must_separate = i->second.dim <= 4;
      r.add("collision", i->first + " ~ " + j->first, to_string(i->second),
            must_separate ? std::optional<bool>(false) : std::nullopt);
      if (must_separate)
        all_ok = false;
      else
        r.notes.push_back("fingerprints do not separate " + i->first + " and " + j->first);
    }
  r.status = all_ok ? ExitStatus::Success : ExitStatus::CheckFailed;
  return r;
}

Report cmd_catalog_export(std::optional<std::string> name, std::optional<std::size_t> dim) {
  Report r;
  r.command = "catalog export";
  std::vector<const catalog::Entry *> entries;
  if (name)
    entries.push_back(&catalog::get(*name));
  else
    entries = catalog::list(dim);
  for (const auto *e : entries) {
    r.add(e->name, sanitize(e->name) + ".alg");
    if (!r.payload.empty())
      r.payload += "\n";
    r.payload += export_algebra_file(e->algebra, e->name);
  }
  return r;
}

Report cmd_iso_verify(const LinearMap &f, const Algebra &a, const Algebra &b) {
  Report r;
  r.command = "iso-verify";
  auto iso = is_isomorphism(f, a, b);
  std::string w;
  if (iso.witness) {
    auto [i, j] = *iso.witness;
    Vector lhs = f(a.basis_product(i, j));
    Vector rhs = b.product(f(a.basis_vector(i)), f(a.basis_vector(j)));
    w = "f(" + basis_name(a, i) + "*" + basis_name(a, j) + ") = " + format_vector(lhs, b.labels()) +
        " but f(" + basis_name(a, i) + ")*f(" + basis_name(a, j) + ") = " +
        format_vector(rhs, b.labels());
  }
  r.add("homomorphism", yes_no(iso.homomorphism), w);
  r.add("determinant", format_scalar(iso.determinant));
  r.add("invertible", yes_no(iso.invertible));
  r.add("isomorphism", yes_no(iso.holds()));
  r.status = iso.holds() ? ExitStatus::Success : ExitStatus::CheckFailed;
  return r;
}

Report cmd_normalize5(const Algebra &a, std::uint64_t seed) {
  Report r;
  r.command = "normalize5";
  try {
    auto res = normalize_dim5(a, seed);
    const auto &d = res.data;
    r.add("x", format_vector(d.x, a.labels()));
    r.add("y", format_vector(d.y, a.labels()));
    r.add("alpha", format_scalar(d.alpha));
    r.add("beta", format_scalar(d.beta));
    r.add("gamma", format_scalar(d.gamma));
    Scalar lhs = 4 * d.beta, rhs = -d.gamma * d.gamma;
    a.field().reduce(lhs);
    a.field().reduce(rhs);
    r.add("4*beta = -gamma^2", yes_no(lhs == rhs),
          format_scalar(lhs) + " = " + format_scalar(rhs));
    const Matrix &m = d.new_basis.matrix();
    for (std::size_t c = 0; c < m.cols(); ++c)
      r.add("new e" + std::to_string(c + 1), format_vector(m.column(c), a.labels()));
    r.add("normal form", yes_no(res.normalized == na5_normal_form(a.field())));
    r.payload = export_algebra_file(res.normalized, "normalized (A_{NA,5} normal form)");
  } catch (const NormalizationError &e) {
    r.add("normalization", "failed", e.what());
    r.status = ExitStatus::CheckFailed;
  }
  return r;
}

} // namespace jjalg::cli
