#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

#include "csp/error.hpp"
#include "csp/model.hpp"

namespace csp {

namespace {

struct Token {
  enum class Kind { Word, Number, Op, End };
  Kind kind = Kind::End;
  std::string text;
  int column = 0;
};

class LineLexer {
public:
  LineLexer(const std::string& line, int line_no) : line_(line), line_no_(line_no) { advance(); }

  const Token& peek() const { return current_; }
  Token take() {
    Token t = current_;
    advance();
    return t;
  }
  int line_no() const { return line_no_; }

  [[noreturn]] void fail(const std::string& message, int column) const {
    throw Error(ErrorKind::Parse, message, line_no_, column);
  }

private:
  void advance() {
    while (pos_ < line_.size() && std::isspace(static_cast<unsigned char>(line_[pos_]))) ++pos_;
    current_ = Token{};
    current_.column = static_cast<int>(pos_) + 1;
    if (pos_ >= line_.size()) {
      current_.kind = Token::Kind::End;
      return;
    }
    const char c = line_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c))) {
      size_t end = pos_;
      while (end < line_.size() &&
             (std::isalnum(static_cast<unsigned char>(line_[end])) || line_[end] == '_'))
        ++end;
      current_.kind = Token::Kind::Word;
      current_.text = line_.substr(pos_, end - pos_);
      pos_ = end;
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t end = pos_;
      while (end < line_.size() && std::isdigit(static_cast<unsigned char>(line_[end]))) ++end;
      current_.kind = Token::Kind::Number;
      current_.text = line_.substr(pos_, end - pos_);
      pos_ = end;
      return;
    }
    if (c == '=' || c == '+' || c == '-' || c == '*' || c == '^' || c == '/') {
      current_.kind = Token::Kind::Op;
      current_.text = std::string(1, c);
      ++pos_;
      return;
    }
    fail(std::string("unexpected character '") + c + "'", current_.column);
  }

  const std::string& line_;
  int line_no_;
  size_t pos_ = 0;
  Token current_;
};

long to_long(LineLexer& lex, const Token& t) {
  try {
    return std::stol(t.text);
  } catch (const std::exception&) {
    lex.fail("integer out of range", t.column);
  }
}

Token expect_op(LineLexer& lex, const std::string& op) {
  const Token t = lex.take();
  if (t.kind != Token::Kind::Op || t.text != op)
    lex.fail("expected '" + op + "'", t.column);
  return t;
}

// Unsigned rational: INT ['/' INT].
Rational parse_rat(LineLexer& lex) {
  const Token num = lex.take();
  if (num.kind != Token::Kind::Number) lex.fail("expected a rational number", num.column);
  std::string text = num.text;
  if (lex.peek().kind == Token::Kind::Op && lex.peek().text == "/") {
    lex.take();
    const Token den = lex.take();
    if (den.kind != Token::Kind::Number) lex.fail("expected a denominator", den.column);
    if (Rational::parse(den.text).is_zero()) lex.fail("zero denominator", den.column);
    text += "/" + den.text;
  }
  return Rational::parse(text);
}

Rational parse_signed_rat(LineLexer& lex) {
  bool negative = false;
  while (lex.peek().kind == Token::Kind::Op &&
         (lex.peek().text == "-" || lex.peek().text == "+")) {
    if (lex.take().text == "-") negative = !negative;
  }
  const Rational r = parse_rat(lex);
  return negative ? -r : r;
}

// SYM = "a" INT, 1-based, bounded by the declared dimension.
int parse_covector(LineLexer& lex, int dim) {
  const Token t = lex.take();
  if (t.kind != Token::Kind::Word || t.text.size() < 2 || t.text[0] != 'a' ||
      !std::all_of(t.text.begin() + 1, t.text.end(),
                   [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    lex.fail("expected a covector like 'a3'", t.column);
  const long idx = std::stol(t.text.substr(1));
  if (idx < 1 || idx > dim)
    throw Error(ErrorKind::Dimension,
                "covector index " + std::to_string(idx) + " outside 1.." + std::to_string(dim),
                lex.line_no(), t.column);
  return static_cast<int>(idx);
}

// form of the requested degree (1 or 2); accepts the literal "0".
KForm parse_form(LineLexer& lex, int dim, int degree) {
  KForm f(dim, degree);
  if (lex.peek().kind == Token::Kind::Number && lex.peek().text == "0") {
    lex.take();
    if (lex.peek().kind != Token::Kind::End) lex.fail("unexpected input after '0'", lex.peek().column);
    return f;
  }
  bool first = true;
  while (true) {
    Rational sign(1);
    if (lex.peek().kind == Token::Kind::Op &&
        (lex.peek().text == "+" || lex.peek().text == "-")) {
      if (lex.take().text == "-") sign = Rational(-1);
    } else if (!first) {
      lex.fail("expected '+' or '-'", lex.peek().column);
    }
    Rational coeff = sign;
    if (lex.peek().kind == Token::Kind::Number) {
      coeff = sign * parse_rat(lex);
      expect_op(lex, "*");
    }
    const int i = parse_covector(lex, dim);
    if (degree == 1) {
      f.add_term({i}, coeff);
    } else {
      const Token hat = expect_op(lex, "^");
      const int j = parse_covector(lex, dim);
      if (i == j) lex.fail("repeated wedge factor a" + std::to_string(i), hat.column);
      f.add_term({i, j}, coeff);
    }
    first = false;
    if (lex.peek().kind == Token::Kind::End) return f;
  }
}

} // namespace

Model parse_model(const std::string& text, const std::string& name) {
  std::optional<int> dim;
  int dim_line = 0;
  std::map<int, KForm> equations;
  std::map<int, int> equation_lines; // basis index -> line
  std::optional<KForm> eta, omega;
  int omega_line = 0, eta_line = 0;

  enum class MetricForm { None, Diagonal, Entries };
  MetricForm metric_form = MetricForm::None;
  int metric_line = 0;
  std::vector<Rational> metric_diag;
  std::map<std::pair<int, int>, Rational> metric_entries;

  std::istringstream stream(text);
  std::string raw;
  int line_no = 0;
  int last_line = 0;
  while (std::getline(stream, raw)) {
    ++line_no;
    last_line = line_no;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    LineLexer lex(raw, line_no);
    if (lex.peek().kind == Token::Kind::End) continue;

    const Token head = lex.take();
    if (head.kind != Token::Kind::Word)
      lex.fail("expected a directive (dim, d, eta, omega, metric)", head.column);

    if (head.text == "dim") {
      if (dim) lex.fail("duplicate dim line", head.column);
      const Token n = lex.take();
      if (n.kind != Token::Kind::Number) lex.fail("expected the dimension", n.column);
      const long value = to_long(lex, n);
      if (value < 1 || value > 64)
        throw Error(ErrorKind::Dimension, "dimension must be in 1..64", line_no, n.column);
      dim = static_cast<int>(value);
      dim_line = line_no;
    } else if (!dim) {
      lex.fail("the dim line must come first", head.column);
    } else if (head.text == "d") {
      const int k = parse_covector(lex, *dim);
      if (equations.count(k)) lex.fail("duplicate structure equation for a" + std::to_string(k), head.column);
      expect_op(lex, "=");
      equations.emplace(k, parse_form(lex, *dim, 2));
      equation_lines[k] = line_no;
    } else if (head.text == "eta") {
      if (eta) lex.fail("duplicate eta line", head.column);
      expect_op(lex, "=");
      eta = parse_form(lex, *dim, 1);
      eta_line = line_no;
    } else if (head.text == "omega") {
      if (omega) lex.fail("duplicate omega line", head.column);
      expect_op(lex, "=");
      omega = parse_form(lex, *dim, 2);
      omega_line = line_no;
    } else if (head.text == "metric") {
      if (lex.peek().kind == Token::Kind::Word && lex.peek().text == "diag") {
        if (metric_form != MetricForm::None) lex.fail("metric already given", head.column);
        lex.take();
        while (lex.peek().kind != Token::Kind::End) metric_diag.push_back(parse_signed_rat(lex));
        if (static_cast<int>(metric_diag.size()) != *dim)
          throw Error(ErrorKind::Dimension,
                      "metric diag expects " + std::to_string(*dim) + " entries, got " +
                          std::to_string(metric_diag.size()),
                      line_no, head.column);
        metric_form = MetricForm::Diagonal;
        metric_line = line_no;
      } else {
        if (metric_form == MetricForm::Diagonal) lex.fail("metric already given as diag", head.column);
        const Token ti = lex.take();
        if (ti.kind != Token::Kind::Number) lex.fail("expected a row index", ti.column);
        const Token tj = lex.take();
        if (tj.kind != Token::Kind::Number) lex.fail("expected a column index", tj.column);
        const long i = to_long(lex, ti), j = to_long(lex, tj);
        if (i < 1 || i > *dim || j < 1 || j > *dim)
          throw Error(ErrorKind::Dimension, "metric entry index outside 1.." + std::to_string(*dim),
                      line_no, ti.column);
        const Rational value = parse_signed_rat(lex);
        const int lo = static_cast<int>(std::min(i, j));
        const int hi = static_cast<int>(std::max(i, j));
        if (!metric_entries.emplace(std::pair{lo, hi}, value).second)
          lex.fail("duplicate metric entry", ti.column);
        metric_form = MetricForm::Entries;
        if (metric_line == 0) metric_line = line_no;
      }
    } else {
      lex.fail("unknown directive '" + head.text + "'", head.column);
    }
    if (lex.peek().kind != Token::Kind::End)
      lex.fail("unexpected trailing input", lex.peek().column);
  }

  if (!dim) throw Error(ErrorKind::Parse, "missing dim line", 1, 1);
  if (!eta) throw Error(ErrorKind::Parse, "missing eta line", last_line, 1);
  if (!omega) throw Error(ErrorKind::Parse, "missing omega line", last_line, 1);
  if (metric_form == MetricForm::None)
    throw Error(ErrorKind::Parse, "missing metric line", last_line, 1);

  Model model;
  try {
    model.algebra = LieAlgebra::from_structure_equations(*dim, equations);
  } catch (const Error& err) {
    if (err.kind() != ErrorKind::Jacobi) throw;
    // Attach the line of the structure equation whose d^2 fails.
    int witness_line = dim_line;
    std::vector<std::array<int, 3>> where;
    std::vector<Rational> values; // rebuild unchecked to locate d^2 != 0
    LieAlgebra probe = LieAlgebra::abelian(*dim);
    {
      std::vector<std::array<int, 3>> w;
      std::vector<Rational> v;
      for (const auto& [k, rhs] : equations)
        for (const auto& [idx, c] : rhs.terms()) {
          w.push_back({k, idx[0], idx[1]});
          v.push_back(-c);
        }
      probe = LieAlgebra::unchecked(*dim, w, v);
    }
    if (const auto k = probe.d_squared_witness(); k && equation_lines.count(*k))
      witness_line = equation_lines[*k];
    Error out(ErrorKind::Jacobi, err.what(), witness_line, 1);
    out.jacobi_triple = err.jacobi_triple;
    throw out;
  }

  Mat g(*dim, *dim);
  if (metric_form == MetricForm::Diagonal) {
    for (int i = 0; i < *dim; ++i) g.at(i, i) = metric_diag[i];
  } else {
    for (const auto& [key, value] : metric_entries) {
      g.at(key.first - 1, key.second - 1) = value;
      g.at(key.second - 1, key.first - 1) = value;
    }
  }
  try {
    model.metric = MetricTensor(std::move(g));
  } catch (const Error& err) {
    throw Error(ErrorKind::Metric, err.what(), metric_line, 1);
  }

  model.eta = *eta;
  model.omega = *omega;
  model.name = name;

  // Stash the pair declaration lines for downstream pair errors.
  // classify_pair itself is dimension-agnostic about provenance, so the
  // caller-facing entry point (run_report / C API) annotates with these.
  model.eta_line = eta_line;
  model.omega_line = omega_line;
  return model;
}

std::string to_dsl(const Model& m) {
  std::ostringstream os;
  os << "dim " << m.algebra.dim() << "\n";
  for (const auto& [k, rhs] : m.algebra.structure_equations())
    os << "d a" << k << " = " << rhs.str() << "\n";
  os << "eta = " << m.eta.str() << "\n";
  os << "omega = " << m.omega.str() << "\n";
  const Mat& g = m.metric.matrix();
  bool diagonal = true;
  for (int i = 0; i < g.rows() && diagonal; ++i)
    for (int j = i + 1; j < g.cols(); ++j)
      if (!g.at(i, j).is_zero()) {
        diagonal = false;
        break;
      }
  if (diagonal) {
    os << "metric diag";
    for (int i = 0; i < g.rows(); ++i) os << " " << g.at(i, i).str();
    os << "\n";
  } else {
    for (int i = 0; i < g.rows(); ++i)
      for (int j = i; j < g.cols(); ++j)
        if (!g.at(i, j).is_zero())
          os << "metric " << i + 1 << " " << j + 1 << " " << g.at(i, j).str() << "\n";
  }
  return os.str();
}

} // namespace csp
