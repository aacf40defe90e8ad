#include "jjalg/algebra_file.hpp"

#include <cctype>
#include <sstream>
#include <vector>

namespace jjalg {

namespace {

std::string strip(const std::string &s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b])))
    ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])))
    --e;
  return s.substr(b, e - b);
}

std::vector<std::string> split_words(const std::string &s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string w; in >> w;)
    out.push_back(w);
  return out;
}

std::vector<std::string> lines_of(const std::string &text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    if (!line.empty() && line.back() == '\r')
      line.pop_back();
    out.push_back(line);
  }
  return out;
}

std::string drop_comment(const std::string &line) {
  auto hash = line.find('#');
  return hash == std::string::npos ? line : line.substr(0, hash);
}

/// Cursor over one product line; columns are 1-based into the raw line.
class LineScanner {
public:
  LineScanner(const std::string &line, std::size_t lineno) : s_(&line), line_(lineno) {}

  void skip_space() {
    while (pos_ < s_->size() && std::isspace(static_cast<unsigned char>((*s_)[pos_])))
      ++pos_;
  }
  bool done() {
    skip_space();
    return pos_ >= s_->size();
  }
  char peek() {
    skip_space();
    return pos_ < s_->size() ? (*s_)[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c)
      return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c))
      fail(std::string("expected '") + c + "'");
  }
  [[noreturn]] void fail(const std::string &msg) const { throw ParseError(msg, line_, pos_ + 1); }
  std::size_t column() const { return pos_ + 1; }

  std::string digits() {
    std::size_t b = pos_;
    while (pos_ < s_->size() && std::isdigit(static_cast<unsigned char>((*s_)[pos_])))
      ++pos_;
    return s_->substr(b, pos_ - b);
  }

  /// e<k>, returned 0-based after range checking against n.
  std::size_t basis_index(std::size_t n) {
    skip_space();
    const std::size_t col = column();
    if (!accept('e'))
      fail("expected a basis element e<k>");
    std::string d = digits();
    if (d.empty())
      fail("expected an index after 'e'");
    unsigned long k = std::stoul(d);
    if (k == 0 || k > n)
      throw ParseError("basis index e" + d + " out of range 1.." + std::to_string(n), line_, col);
    return k - 1;
  }

  Scalar rational() {
    skip_space();
    std::string num = digits();
    if (num.empty())
      fail("expected a number");
    std::string text = num;
    if (pos_ < s_->size() && (*s_)[pos_] == '/') {
      ++pos_;
      std::string den = digits();
      if (den.empty())
        fail("expected a denominator");
      text += "/" + den;
    }
    try {
      return parse_rational(text);
    } catch (const std::exception &e) {
      fail(e.what());
    }
  }

private:
  const std::string *s_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

/// <lincomb> := "0" | term (('+'|'-') term)*, term := [coeff ['*']] e<k>
Vector parse_lincomb(LineScanner &sc, std::size_t n) {
  Vector v(n);
  if (sc.peek() == '0') {
    // A lone zero; "0 e1" style is also accepted below.
    LineScanner probe = sc;
    probe.rational();
    if (probe.done()) {
      sc = probe;
      return v;
    }
  }
  bool first = true;
  while (true) {
    Scalar sign = 1;
    if (sc.accept('-'))
      sign = -1;
    else if (!sc.accept('+') && !first)
      sc.fail("expected '+' or '-'");
    Scalar coeff = 1;
    if (std::isdigit(static_cast<unsigned char>(sc.peek()))) {
      coeff = sc.rational();
      sc.accept('*');
    }
    std::size_t k = sc.basis_index(n);
    v[k] += sign * coeff;
    first = false;
    if (sc.done())
      return v;
  }
}

std::string format_lincomb(std::span<const Scalar> v) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (is_zero(v[k]))
      continue;
    Scalar c = v[k];
    if (out.empty()) {
      if (c < 0)
        out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    Scalar mag = abs(c);
    if (mag != 1)
      out += format_scalar(mag) + " ";
    out += "e" + std::to_string(k + 1);
  }
  return out.empty() ? "0" : out;
}

} // namespace

Algebra parse_algebra_file(const std::string &text, std::optional<Field> field) {
  std::optional<std::size_t> dim;
  std::optional<Field> declared;
  std::optional<std::vector<std::string>> labels;
  bool symmetric = false;
  std::optional<Algebra::Builder> builder;

  auto lines = lines_of(text);
  for (std::size_t ln = 0; ln < lines.size(); ++ln) {
    const std::size_t lineno = ln + 1;
    const std::string body = drop_comment(lines[ln]);
    const std::string line = strip(body);
    if (line.empty())
      continue;
    auto words = split_words(line);
    const std::string &head = words[0];

    if (head == "dim") {
      if (builder)
        throw ParseError("'dim' after product lines", lineno, 1);
      if (dim)
        throw ParseError("duplicate 'dim'", lineno, 1);
      if (words.size() != 2 || words[1].find_first_not_of("0123456789") != std::string::npos)
        throw ParseError("expected 'dim <n>'", lineno, 1);
      dim = std::stoul(words[1]);
      continue;
    }
    if (head == "char") {
      if (builder)
        throw ParseError("'char' after product lines", lineno, 1);
      if (words.size() != 2)
        throw ParseError("expected 'char <0|p>'", lineno, 1);
      try {
        declared = Field::parse(words[1]);
      } catch (const std::exception &e) {
        throw ParseError(e.what(), lineno, 1);
      }
      continue;
    }
    if (head == "labels") {
      labels = std::vector<std::string>(words.begin() + 1, words.end());
      continue;
    }
    if (head == "symmetric") {
      if (words.size() != 1)
        throw ParseError("'symmetric' takes no arguments", lineno, 1);
      if (builder)
        throw ParseError("'symmetric' after product lines", lineno, 1);
      symmetric = true;
      continue;
    }
    if (head[0] != 'e')
      throw ParseError("unknown directive '" + head + "'", lineno, 1);

    if (!dim)
      throw ParseError("product line before 'dim'", lineno, 1);
    if (!builder)
      builder.emplace(field ? *field : declared.value_or(Field::rationals()), *dim);

    LineScanner sc(body, lineno);
    std::size_t i = sc.basis_index(*dim);
    sc.expect('*');
    std::size_t j = sc.basis_index(*dim);
    sc.expect('=');
    if (sc.done())
      sc.fail("missing right-hand side");
    Vector v = parse_lincomb(sc, *dim);
    try {
      builder->set(i, j, v, symmetric);
    } catch (const std::invalid_argument &e) {
      throw ParseError(e.what(), lineno, 1);
    }
  }

  if (!dim)
    throw ParseError("missing 'dim'", lines.empty() ? 1 : lines.size(), 1);
  if (!builder)
    builder.emplace(field ? *field : declared.value_or(Field::rationals()), *dim);
  if (labels) {
    if (labels->size() != *dim)
      throw ParseError("'labels' lists " + std::to_string(labels->size()) + " names for dim " +
                           std::to_string(*dim),
                       1, 1);
    builder->labels(*labels);
  }
  return builder->build();
}

std::string export_algebra_file(const Algebra &a, const std::string &title) {
  const std::size_t n = a.dim();
  std::string out;
  if (!title.empty())
    out += "# " + title + "\n";
  out += "dim " + std::to_string(n) + "\n";
  out += "char " + std::to_string(a.field().characteristic()) + "\n";
  bool default_labels = true;
  for (std::size_t i = 0; i < n; ++i)
    if (a.labels()[i] != "e" + std::to_string(i + 1))
      default_labels = false;
  if (!default_labels) {
    out += "labels";
    for (const auto &l : a.labels())
      out += " " + l;
    out += "\n";
  }
  const bool symmetric = is_commutative(a).commutative;
  if (symmetric)
    out += "symmetric\n";
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = symmetric ? i : 0; j < n; ++j) {
      Vector v = a.basis_product(i, j);
      if (is_zero(v))
        continue;
      out += "e" + std::to_string(i + 1) + "*e" + std::to_string(j + 1) + " = " +
             format_lincomb(v) + "\n";
    }
  return out;
}

LinearMap parse_matrix_file(const std::string &text, Field field) {
  std::optional<bool> columns;
  std::optional<std::size_t> rows;
  std::vector<Vector> data;
  auto lines = lines_of(text);
  for (std::size_t ln = 0; ln < lines.size(); ++ln) {
    const std::size_t lineno = ln + 1;
    const std::string line = strip(drop_comment(lines[ln]));
    if (line.empty())
      continue;
    auto words = split_words(line);
    if (words[0] == "convention") {
      if (words.size() != 2 || (words[1] != "columns-are-images" && words[1] != "rows-are-images"))
        throw ParseError("expected 'convention columns-are-images|rows-are-images'", lineno, 1);
      columns = words[1] == "columns-are-images";
      continue;
    }
    if (words[0] == "rows") {
      if (words.size() != 2 || words[1].find_first_not_of("0123456789") != std::string::npos)
        throw ParseError("expected 'rows <n>'", lineno, 1);
      rows = std::stoul(words[1]);
      continue;
    }
    if (!rows)
      throw ParseError("matrix row before 'rows'", lineno, 1);
    if (words.size() != *rows)
      throw ParseError("expected " + std::to_string(*rows) + " entries, found " +
                           std::to_string(words.size()),
                       lineno, 1);
    Vector row;
    for (const auto &w : words) {
      try {
        row.push_back(field.from(parse_rational(w)));
      } catch (const std::exception &e) {
        throw ParseError("bad entry '" + w + "': " + e.what(), lineno, 1);
      }
    }
    data.push_back(std::move(row));
  }
  if (!columns)
    throw ParseError("missing 'convention' line", 1, 1);
  if (!rows)
    throw ParseError("missing 'rows' line", 1, 1);
  if (data.size() != *rows)
    throw ParseError("expected " + std::to_string(*rows) + " rows, found " +
                         std::to_string(data.size()),
                     lines.size(), 1);
  Matrix m = Matrix::from_rows(field, data);
  return *columns ? LinearMap(m) : LinearMap::from_rows_as_images(m);
}

std::string export_matrix_file(const LinearMap &f) {
  const Matrix &m = f.matrix();
  std::string out = "convention columns-are-images\nrows " + std::to_string(m.rows()) + "\n";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c)
      out += (c ? " " : "") + format_scalar(m(r, c));
    out += "\n";
  }
  return out;
}

} // namespace jjalg
