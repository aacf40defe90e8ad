#include "jjalg/identity.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace jjalg {

Word Word::variable(std::size_t var) {
  Word w;
  w.nodes_.push_back({static_cast<long>(var), 0, 0});
  return w;
}

Word operator*(const Word &left, const Word &right) {
  Word w;
  w.nodes_ = left.nodes_;
  const std::size_t offset = w.nodes_.size();
  for (auto node : right.nodes_) {
    if (node.var < 0) {
      node.left += offset;
      node.right += offset;
    }
    w.nodes_.push_back(node);
  }
  w.nodes_.push_back({-1, offset - 1, w.nodes_.size() - 1});
  return w;
}

Word Word::power(const Word &x, std::size_t k) {
  if (k == 0)
    throw std::invalid_argument("principal powers start at 1");
  Word w = x;
  for (std::size_t i = 1; i < k; ++i)
    w = x * w;
  return w;
}

std::vector<std::size_t> Word::leaves() const {
  // Nodes are stored in post-order, so leaves appear left to right.
  std::vector<std::size_t> out;
  for (const auto &node : nodes_)
    if (node.var >= 0)
      out.push_back(static_cast<std::size_t>(node.var));
  return out;
}

std::size_t Word::degree_in(std::size_t var) const {
  auto l = leaves();
  return static_cast<std::size_t>(std::count(l.begin(), l.end(), var));
}

void Word::to_string_node(std::size_t node, const std::vector<std::string> &names,
                          std::string &out) const {
  const auto &nd = nodes_[node];
  if (nd.var >= 0) {
    auto v = static_cast<std::size_t>(nd.var);
    out += v < names.size() ? names[v] : "x" + std::to_string(v);
    return;
  }
  auto wrap = [&](std::size_t child) {
    bool leaf = nodes_[child].var >= 0;
    if (!leaf)
      out += '(';
    to_string_node(child, names, out);
    if (!leaf)
      out += ')';
  };
  wrap(nd.left);
  out += '*';
  wrap(nd.right);
}

std::string Word::to_string(const std::vector<std::string> &names) const {
  std::string out;
  to_string_node(nodes_.size() - 1, names, out);
  return out;
}

Vector Word::eval_node(std::size_t node, const Algebra &a,
                       const std::vector<const Vector *> &values, std::size_t &next) const {
  const auto &nd = nodes_[node];
  if (nd.var >= 0)
    return *values.at(next++);
  Vector l = eval_node(nd.left, a, values, next);
  if (is_zero(l)) {
    // Skip the right subtree but keep the leaf counter consistent.
    std::size_t skipped = 0;
    for (std::size_t i = nd.left + 1; i <= nd.right; ++i)
      if (nodes_[i].var >= 0)
        ++skipped;
    next += skipped;
    return l;
  }
  Vector r = eval_node(nd.right, a, values, next);
  return a.product(l, r);
}

Vector Word::evaluate(const Algebra &a, const std::vector<const Vector *> &values) const {
  std::size_t next = 0;
  return eval_node(nodes_.size() - 1, a, values, next);
}

// ---------------------------------------------------------------------------

Identity &Identity::add(const Scalar &coeff, Word word) {
  for (auto v : word.leaves())
    if (v >= variables_.size())
      throw std::invalid_argument("identity term uses undeclared variable");
  terms_.push_back({coeff, std::move(word)});
  return *this;
}

std::size_t Identity::max_variable_degree() const {
  std::size_t best = 0;
  for (const auto &t : terms_)
    for (std::size_t v = 0; v < variables_.size(); ++v)
      best = std::max(best, t.word.degree_in(v));
  return best;
}

Identity Identity::commutativity() {
  auto x = Word::variable(0), y = Word::variable(1);
  Identity id("commutativity", {"x", "y"});
  id.add(1, x * y).add(-1, y * x);
  return id;
}

Identity Identity::jacobi() {
  auto x = Word::variable(0), y = Word::variable(1), z = Word::variable(2);
  Identity id("jacobi", {"x", "y", "z"});
  id.add(1, x * (y * z)).add(1, y * (z * x)).add(1, z * (x * y));
  return id;
}

Identity Identity::associativity() {
  auto x = Word::variable(0), y = Word::variable(1), z = Word::variable(2);
  Identity id("associativity", {"x", "y", "z"});
  id.add(1, (x * y) * z).add(-1, x * (y * z));
  return id;
}

Identity Identity::jordan() {
  auto x = Word::variable(0), y = Word::variable(1);
  Identity id("jordan", {"x", "y"});
  id.add(1, (x * y) * (x * x)).add(-1, x * (y * (x * x)));
  return id;
}

Identity Identity::nil(std::size_t m) {
  Identity id("x^" + std::to_string(m) + " = 0", {"x"});
  id.add(1, Word::power(Word::variable(0), m));
  return id;
}

Identity Identity::power_associativity(std::size_t i, std::size_t j) {
  auto x = Word::variable(0);
  Identity id("x^" + std::to_string(i) + "*x^" + std::to_string(j) + " = x^" +
                  std::to_string(i + j),
              {"x"});
  id.add(1, Word::power(x, i) * Word::power(x, j)).add(-1, Word::power(x, i + j));
  return id;
}

// ---------------------------------------------------------------------------

namespace {

using Multidegree = std::vector<std::size_t>;

/// All non-decreasing sequences of length `len` over [0, n).
std::vector<std::vector<std::size_t>> multisets(std::size_t n, std::size_t len) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (cur.size() == len) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      cur.push_back(i);
      rec(i);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

struct PreparedTerm {
  const Identity::Term *term;
  std::vector<std::vector<std::size_t>> positions; // leaf positions per variable
  std::size_t leaf_count;
};

/// Counts of basis indices per variable, flattened as counts[v * n + k].
using Counts = std::vector<unsigned char>;

/// Sum of a word over every distinct arrangement of a fixed multiset of basis
/// vectors per variable onto its leaves. Summing distinct arrangements
/// instead of all d! bijections rescales the multilinear value by a nonzero
/// integer when char > d. An arrangement splits uniquely into the
/// sub-multisets placed under the left and right child, so node values are
/// memoized by (node, sub-multiset).
class TermEvaluator {
public:
  TermEvaluator(const Algebra &a, const Word &word, std::size_t nvars)
      : a_(a), nodes_(word.nodes()), nvars_(nvars), n_(a.dim()) {
    degrees_.resize(nodes_.size());
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
      degrees_[i].assign(nvars, 0);
      const auto &nd = nodes_[i];
      if (nd.var >= 0) {
        degrees_[i][static_cast<std::size_t>(nd.var)] = 1;
      } else {
        for (std::size_t v = 0; v < nvars; ++v)
          degrees_[i][v] = degrees_[nd.left][v] + degrees_[nd.right][v];
      }
    }
  }

  const Vector &root(const Counts &counts) { return value(nodes_.size() - 1, counts); }

private:
  const Vector &value(std::size_t node, const Counts &counts) {
    auto key = std::make_pair(node, counts);
    if (auto it = memo_.find(key); it != memo_.end())
      return it->second;
    Vector out(n_);
    const auto &nd = nodes_[node];
    if (nd.var >= 0) {
      const std::size_t v = static_cast<std::size_t>(nd.var);
      for (std::size_t k = 0; k < n_; ++k)
        if (counts[v * n_ + k])
          out[k] = 1;
    } else {
      Counts left(counts.size(), 0);
      split(node, counts, left, 0, 0, out);
    }
    return memo_.emplace(std::move(key), std::move(out)).first->second;
  }

  // Enumerates sub-multisets `left` of `counts` with the left child's degree
  // in every variable, accumulating left * right products into `out`.
  void split(std::size_t node, const Counts &counts, Counts &left, std::size_t v,
             std::size_t k, Vector &out) {
    const auto &nd = nodes_[node];
    if (v == nvars_) {
      const Vector &l = value(nd.left, left);
      if (is_zero(l))
        return;
      Counts right(counts.size());
      for (std::size_t i = 0; i < counts.size(); ++i)
        right[i] = static_cast<unsigned char>(counts[i] - left[i]);
      const Vector &r = value(nd.right, right);
      if (is_zero(r))
        return;
      Vector prod = a_.product(l, r);
      for (std::size_t i = 0; i < n_; ++i)
        if (!is_zero(prod[i])) {
          out[i] += prod[i];
          a_.field().reduce(out[i]);
        }
      return;
    }
    std::size_t placed = 0;
    for (std::size_t i = 0; i < n_; ++i)
      placed += left[v * n_ + i];
    const std::size_t need = degrees_[nd.left][v];
    if (k == n_) {
      if (placed == need)
        split(node, counts, left, v + 1, 0, out);
      return;
    }
    const std::size_t room = need - placed;
    const std::size_t avail = counts[v * n_ + k];
    for (std::size_t c = 0; c <= std::min(room, avail); ++c) {
      left[v * n_ + k] = static_cast<unsigned char>(c);
      split(node, counts, left, v, k + 1, out);
    }
    left[v * n_ + k] = 0;
  }

  const Algebra &a_;
  const std::vector<Word::Node> &nodes_;
  std::size_t nvars_, n_;
  std::vector<std::vector<std::size_t>> degrees_;
  std::map<std::pair<std::size_t, Counts>, Vector> memo_;
};

IdentityCheck check_component(const Algebra &a, const std::vector<PreparedTerm> &terms,
                              const Multidegree &degrees) {
  const std::size_t n = a.dim();
  const std::size_t nvars = degrees.size();

  std::vector<TermEvaluator> evaluators;
  for (const auto &pt : terms)
    evaluators.emplace_back(a, pt.term->word, nvars);

  std::vector<std::vector<std::vector<std::size_t>>> options;
  for (auto d : degrees)
    options.push_back(multisets(n, d));

  std::vector<std::vector<std::size_t>> choice(nvars);
  IdentityCheck result;
  std::function<bool(std::size_t)> rec = [&](std::size_t v) -> bool {
    if (v == nvars) {
      Counts counts(nvars * n, 0);
      for (std::size_t u = 0; u < nvars; ++u)
        for (auto k : choice[u])
          ++counts[u * n + k];
      Vector acc(n);
      for (std::size_t t = 0; t < terms.size(); ++t) {
        const Vector &val = evaluators[t].root(counts);
        for (std::size_t k = 0; k < n; ++k)
          if (!is_zero(val[k]))
            acc[k] += terms[t].term->coeff * val[k];
      }
      for (auto &s : acc)
        a.field().reduce(s);
      if (!is_zero(acc)) {
        result.holds = false;
        result.witness = choice;
        result.value = std::move(acc);
        return false;
      }
      return true;
    }
    for (const auto &opt : options[v]) {
      choice[v] = opt;
      if (!rec(v + 1))
        return false;
    }
    return true;
  };
  rec(0);
  return result;
}

} // namespace

IdentityCheck check_identity(const Algebra &a, const Identity &id) {
  const std::size_t max_deg = id.max_variable_degree();
  if (!a.field().supports_degree(max_deg))
    throw std::domain_error("characteristic " + std::to_string(a.field().characteristic()) +
                            " is too small to multilinearize '" + id.name() +
                            "' (variable degree " + std::to_string(max_deg) + ")");

  const std::size_t nvars = id.variables().size();
  std::map<Multidegree, std::vector<PreparedTerm>> components;
  for (const auto &term : id.terms()) {
    PreparedTerm pt{&term, std::vector<std::vector<std::size_t>>(nvars), 0};
    auto leaves = term.word.leaves();
    pt.leaf_count = leaves.size();
    for (std::size_t pos = 0; pos < leaves.size(); ++pos)
      pt.positions[leaves[pos]].push_back(pos);
    Multidegree deg(nvars);
    for (std::size_t v = 0; v < nvars; ++v)
      deg[v] = pt.positions[v].size();
    components[deg].push_back(std::move(pt));
  }
  for (const auto &[deg, terms] : components) {
    auto r = check_component(a, terms, deg);
    if (!r.holds)
      return r;
  }
  return {};
}

IdentityCheck check_multilinear_on_basis(const Algebra &a, const Identity &id) {
  const std::size_t n = a.dim();
  const std::size_t nvars = id.variables().size();
  for (const auto &t : id.terms())
    for (std::size_t v = 0; v < nvars; ++v)
      if (t.word.degree_in(v) != 1)
        throw std::invalid_argument("identity '" + id.name() + "' is not multilinear");
  std::vector<Vector> basis;
  for (std::size_t i = 0; i < n; ++i)
    basis.push_back(a.basis_vector(i));

  std::vector<std::size_t> tuple(nvars, 0);
  if (n == 0)
    return {};
  while (true) {
    Vector acc(n);
    for (const auto &t : id.terms()) {
      std::vector<const Vector *> values;
      for (auto v : t.word.leaves())
        values.push_back(&basis[tuple[v]]);
      Vector val = t.word.evaluate(a, values);
      for (std::size_t k = 0; k < n; ++k)
        acc[k] += t.coeff * val[k];
    }
    for (auto &s : acc)
      a.field().reduce(s);
    if (!is_zero(acc)) {
      IdentityCheck r;
      r.holds = false;
      std::vector<std::vector<std::size_t>> w;
      for (auto i : tuple)
        w.push_back({i});
      r.witness = std::move(w);
      r.value = std::move(acc);
      return r;
    }
    std::size_t pos = nvars;
    while (pos > 0) {
      --pos;
      if (++tuple[pos] < n)
        break;
      tuple[pos] = 0;
      if (pos == 0)
        return {};
    }
    if (nvars == 0)
      return {};
  }
}

} // namespace jjalg
