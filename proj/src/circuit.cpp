// Copyright 2026 The mgsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mgsim/circuit.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <set>
#include <sstream>

#include "mgsim/engine_lie.hpp"
#include "mgsim/engine_quadratic.hpp"
#include "mgsim/error.hpp"

namespace mgsim {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

bool invertible(const Eigen::MatrixXcd& m) {
  const double scale = std::pow(m.norm(), static_cast<double>(m.rows()));
  return scale > 0.0 && std::abs(m.determinant()) > 1e-12 * scale;
}

bool is_unitary(const Eigen::MatrixXcd& m, double tol) {
  const auto id = Eigen::MatrixXcd::Identity(m.rows(), m.cols());
  return (m.adjoint() * m - id).cwiseAbs().maxCoeff() <= tol;
}

Mat4 diag_matrix(const std::array<cplx, 4>& d) {
  Mat4 m = Mat4::Zero();
  for (int i = 0; i < 4; ++i) m(i, i) = d[i];
  return m;
}

void check_diag(const std::array<cplx, 4>& d, double tol) {
  for (cplx x : d) {
    if (x == 0.0) throw GateClassError("invertible", "diagonal entry is zero");
  }
  const cplx lhs = d[0] * d[3];
  const cplx rhs = d[1] * d[2];
  if (std::abs(lhs - rhs) > tol * (std::abs(lhs) + std::abs(rhs))) {
    std::ostringstream os;
    os << "|B11 B44 - B22 B33| = " << std::abs(lhs - rhs);
    throw GateClassError("B11 B44 = B22 B33", os.str());
  }
}

}  // namespace

std::string gate_class(const GateRecord& g) {
  return std::visit(Overloaded{[](const GvwGate&) { return std::string("gvw"); },
                               [](const DiagGate&) { return std::string("diag"); },
                               [](const Mg12Gate&) { return std::string("mg12"); },
                               [](const U1Gate&) { return std::string("u1"); },
                               [](const ExpGate&) { return std::string("exp"); }},
                    g);
}

std::vector<int> gate_lines(const GateRecord& g) {
  return std::visit(
      Overloaded{[](const GvwGate& x) { return std::vector<int>{x.k, x.k + 1}; },
                 [](const DiagGate& x) { return std::vector<int>{x.k, x.l}; },
                 [](const Mg12Gate&) { return std::vector<int>{1, 2}; },
                 [](const U1Gate&) { return std::vector<int>{1}; },
                 [](const ExpGate& x) { return x.a.line_support(); }},
      g);
}

void validate_gate(const GateRecord& g, int n, double tol) {
  std::visit(
      Overloaded{
          [&](const GvwGate& x) {
            if (x.k < 1 || x.k + 1 > n) {
              throw GateClassError("nearest-neighbour lines",
                                   "gvw needs lines (k, k+1) inside 1.." + std::to_string(n) +
                                       ", got k = " + std::to_string(x.k));
            }
            g_vw(x.v, x.w, tol);
            if (!invertible(x.v)) throw GateClassError("invertible", "det V = 0");
          },
          [&](const DiagGate& x) {
            if (x.k < 1 || x.l > n || x.k >= x.l) {
              throw GateClassError("line pair k < l",
                                   "diag needs 1 <= k < l <= " + std::to_string(n) + ", got " +
                                       std::to_string(x.k) + ", " + std::to_string(x.l));
            }
            check_diag(x.d, tol);
          },
          [&](const Mg12Gate& x) {
            if (n < 2) throw GateClassError("lines (1,2) only", "register has one line");
            if (!is_matchgate(x.b, tol)) {
              std::ostringstream os;
              os << "largest identity residual " << identity_residual(x.b);
              throw GateClassError("matchgate identities", os.str());
            }
            if (!invertible(x.b)) throw GateClassError("invertible", "det B = 0");
          },
          [&](const U1Gate& x) {
            if (n < 1) throw GateClassError("line 1 only", "empty register");
            if (!invertible(x.u)) throw GateClassError("invertible", "det U = 0");
          },
          [&](const ExpGate& x) {
            if (x.a.n() != n) {
              throw GateClassError("exponent line count",
                                   "exponent is on " + std::to_string(x.a.n()) +
                                       " lines, circuit has " + std::to_string(n));
            }
          }},
      g);
}

bool gate_is_unitary(const GateRecord& g, double tol) {
  return std::visit(Overloaded{[&](const GvwGate& x) {
                                 return is_unitary(x.v, tol) && is_unitary(x.w, tol);
                               },
                               [&](const DiagGate& x) {
                                 for (cplx d : x.d) {
                                   if (std::abs(std::abs(d) - 1.0) > tol) return false;
                                 }
                                 return true;
                               },
                               [&](const Mg12Gate& x) { return is_unitary(x.b, tol); },
                               [&](const U1Gate& x) { return is_unitary(x.u, tol); },
                               [&](const ExpGate& x) { return x.a.is_anti_hermitian(tol); }},
                    g);
}

bool Circuit::unitary(double tol) const {
  for (const GateRecord& g : gates) {
    if (!gate_is_unitary(g, tol)) return false;
  }
  return true;
}

// Complex literals ----------------------------------------------------------

namespace {

bool parse_real(std::string_view s, double& out) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  if (s.empty() || s.front() == '+') return false;
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, out);
  return ec == std::errc() && ptr == end && std::isfinite(out);
}

// Coefficient of i: "", "+" and "-" stand for 1, 1 and -1.
bool parse_imag(std::string_view s, double& out) {
  if (s.empty() || s == "+") {
    out = 1.0;
    return true;
  }
  if (s == "-") {
    out = -1.0;
    return true;
  }
  return parse_real(s, out);
}

std::string format_real(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 17);
  return std::string(buf, ptr);
}

}  // namespace

cplx parse_complex(std::string_view text) {
  const std::string t(text);
  auto fail = [&]() -> cplx { throw PreconditionError("malformed complex literal '" + t + "'"); };
  if (text.empty()) return fail();
  if (text.back() != 'i') {
    double re = 0.0;
    if (!parse_real(text, re)) return fail();
    return {re, 0.0};
  }
  std::string_view body = text.substr(0, text.size() - 1);
  std::size_t split = std::string_view::npos;
  for (std::size_t p = body.size(); p-- > 1;) {
    if ((body[p] == '+' || body[p] == '-') && body[p - 1] != 'e' && body[p - 1] != 'E') {
      split = p;
      break;
    }
  }
  double re = 0.0;
  double im = 0.0;
  if (split == std::string_view::npos) {
    if (!parse_imag(body, im)) return fail();
  } else if (!parse_real(body.substr(0, split), re) || !parse_imag(body.substr(split), im)) {
    return fail();
  }
  return {re, im};
}

std::string render_complex(cplx z) {
  const double re = z.real();
  const double im = z.imag();
  if (im == 0.0 && !std::signbit(im)) return format_real(re);
  const std::string ims = format_real(im) + "i";
  if (re == 0.0 && !std::signbit(re)) return ims;
  return format_real(re) + (std::signbit(im) ? "" : "+") + ims;
}

// Circuit text ----------------------------------------------------------------

namespace {

struct Token {
  bool word;
  std::string text;
  int column;
};

bool word_char(char ch) {
  return std::isalnum(static_cast<unsigned char>(ch)) || ch == '.' || ch == '+' || ch == '-' ||
         ch == '_';
}

class LineParser {
 public:
  LineParser(std::string_view line, int line_no) : line_no_(line_no) {
    std::size_t i = 0;
    while (i < line.size()) {
      const char ch = line[i];
      if (ch == '#') break;
      if (std::isspace(static_cast<unsigned char>(ch))) {
        ++i;
        continue;
      }
      const int col = static_cast<int>(i) + 1;
      if (word_char(ch)) {
        std::size_t j = i;
        while (j < line.size() && word_char(line[j])) ++j;
        toks_.push_back({true, std::string(line.substr(i, j - i)), col});
        i = j;
      } else if (std::string_view("=[],;()").find(ch) != std::string_view::npos) {
        toks_.push_back({false, std::string(1, ch), col});
        ++i;
      } else {
        throw ParseError(std::string("unexpected character '") + ch + "'", line_no_, col);
      }
    }
    end_col_ = static_cast<int>(line.size()) + 1;
  }

  bool empty() const { return toks_.empty(); }
  bool done() const { return pos_ >= toks_.size(); }
  int line() const { return line_no_; }
  int column() const { return done() ? end_col_ : toks_[pos_].column; }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, line_no_, column());
  }

  bool peek_punct(char ch) const {
    return !done() && !toks_[pos_].word && toks_[pos_].text[0] == ch;
  }
  bool peek_word() const { return !done() && toks_[pos_].word; }
  const std::string& peek_text() const { return toks_[pos_].text; }

  void punct(char ch) {
    if (!peek_punct(ch)) fail(std::string("expected '") + ch + "'");
    ++pos_;
  }

  std::string word(const char* what) {
    if (!peek_word()) fail(std::string("expected ") + what);
    return toks_[pos_++].text;
  }

  void keyword(const std::string& kw) {
    if (!peek_word() || toks_[pos_].text != kw) fail("expected '" + kw + "'");
    ++pos_;
  }

  int integer(const char* what) {
    if (!peek_word()) fail(std::string("expected ") + what);
    const std::string& t = toks_[pos_].text;
    int v = 0;
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc() || ptr != t.data() + t.size()) {
      fail(std::string("expected ") + what + ", got '" + t + "'");
    }
    ++pos_;
    return v;
  }

  cplx complex() {
    if (!peek_word()) fail("expected a complex literal");
    try {
      cplx z = parse_complex(toks_[pos_].text);
      ++pos_;
      return z;
    } catch (const PreconditionError& e) {
      fail(e.what());
    }
  }

  // '[' a, b; c, d ']'
  Eigen::MatrixXcd matrix(int size) {
    punct('[');
    Eigen::MatrixXcd m(size, size);
    for (int r = 0; r < size; ++r) {
      for (int c = 0; c < size; ++c) {
        m(r, c) = complex();
        if (c + 1 < size) punct(',');
      }
      if (r + 1 < size) {
        if (peek_punct(',')) fail("matrix row has more than " + std::to_string(size) + " entries");
        punct(';');
      }
    }
    if (!peek_punct(']')) fail("matrix must be " + std::to_string(size) + "x" + std::to_string(size));
    punct(']');
    return m;
  }

  Eigen::MatrixXcd named_matrix(const std::string& name, int size) {
    keyword(name);
    punct('=');
    return matrix(size);
  }

  void finish() {
    if (!done()) fail("unexpected '" + toks_[pos_].text + "'");
  }

 private:
  int line_no_;
  int end_col_ = 1;
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

const char* const kStateNames[] = {"0", "1", "+", "-", "i", "-i"};

bool is_state_name(const std::string& t) {
  for (const char* name : kStateNames) {
    if (t == name) return true;
  }
  return false;
}

ProductState parse_state(LineParser& p, int n) {
  std::vector<ProductState::Qubit> qubits;
  while (!p.done()) {
    if (p.peek_punct('(')) {
      const int col = p.column();
      ProductState::Qubit q;
      for (int c = 0; c < 2; ++c) {
        p.punct('(');
        const cplx re = p.complex();
        p.punct(',');
        const cplx im = p.complex();
        p.punct(')');
        if (re.imag() != 0.0 || im.imag() != 0.0) {
          throw ParseError("amplitude parts must be real", p.line(), col);
        }
        q[c] = cplx(re.real(), im.real());
      }
      const double norm = std::sqrt(std::norm(q[0]) + std::norm(q[1]));
      if (std::abs(norm - 1.0) > 1e-12) {
        throw ParseError("amplitudes are not normalized", p.line(), col);
      }
      qubits.push_back(q);
      continue;
    }
    const int col = p.column();
    const std::string t = p.word("a state token");
    if (is_state_name(t)) {
      qubits.push_back(ProductState::named(t));
    } else if (t.find_first_not_of("01+-") == std::string::npos) {
      for (char ch : t) qubits.push_back(ProductState::named(std::string(1, ch)));
    } else {
      throw ParseError("unknown state token '" + t + "'", p.line(), col);
    }
  }
  if (static_cast<int>(qubits.size()) != n) {
    p.fail("state has " + std::to_string(qubits.size()) + " lines, circuit has " +
           std::to_string(n));
  }
  return ProductState(std::move(qubits));
}

// Optional explicit line list for classes with fixed lines.
void fixed_lines(LineParser& p, const std::vector<int>& expected, const char* rule) {
  std::vector<int> got;
  while (p.peek_word() && std::isdigit(static_cast<unsigned char>(p.peek_text()[0]))) {
    got.push_back(p.integer("a line number"));
  }
  if (!got.empty() && got != expected) {
    throw GateClassError(rule, "line " + std::to_string(p.line()) + ": got lines given as " +
                                   [&] {
                                     std::string s;
                                     for (int l : got) s += (s.empty() ? "" : " ") + std::to_string(l);
                                     return s;
                                   }());
  }
}

GateExponent parse_exp(LineParser& p, int n) {
  GateExponent g(n);
  std::set<std::string> seen;
  const int m = 2 * n;
  while (!p.done()) {
    const int col = p.column();
    const std::string key = p.word("a coefficient name");
    std::string id;
    if (key == "a") {
      p.punct('[');
      const int mu = p.integer("a generator index");
      p.punct(',');
      const int nu = p.integer("a generator index");
      p.punct(']');
      if (mu < 1 || mu > m || nu < 1 || nu > m || mu == nu) {
        throw ParseError("a[" + std::to_string(mu) + "," + std::to_string(nu) +
                             "] needs distinct indices in 1.." + std::to_string(m),
                         p.line(), col);
      }
      p.punct('=');
      id = "a" + std::to_string(std::min(mu, nu)) + "," + std::to_string(std::max(mu, nu));
      if (!seen.insert(id).second) throw ParseError("duplicate coefficient", p.line(), col);
      g.set_a(mu, nu, p.complex());
    } else if (key == "b") {
      p.punct('[');
      const int sigma = p.integer("a generator index");
      p.punct(']');
      if (sigma < 1 || sigma > m) {
        throw ParseError("b[" + std::to_string(sigma) + "] needs an index in 1.." +
                             std::to_string(m),
                         p.line(), col);
      }
      p.punct('=');
      id = "b" + std::to_string(sigma);
      if (!seen.insert(id).second) throw ParseError("duplicate coefficient", p.line(), col);
      g.set_b(sigma, p.complex());
    } else if (key == "s") {
      p.punct('=');
      if (!seen.insert("s").second) throw ParseError("duplicate coefficient", p.line(), col);
      g.set_s(p.complex());
    } else {
      throw ParseError("unknown coefficient '" + key + "'", p.line(), col);
    }
  }
  return g;
}

GateRecord parse_gate(LineParser& p, int n) {
  const int col = p.column();
  const std::string kind = p.word("a gate class");
  GateRecord g;
  if (kind == "gvw") {
    GvwGate x;
    x.k = p.integer("line k");
    if (p.peek_word() && std::isdigit(static_cast<unsigned char>(p.peek_text()[0]))) {
      const int second = p.integer("line k+1");
      if (second != x.k + 1) {
        throw GateClassError("nearest-neighbour lines",
                             "line " + std::to_string(p.line()) + ": gvw on lines " +
                                 std::to_string(x.k) + " and " + std::to_string(second));
      }
    }
    x.v = p.named_matrix("V", 2);
    x.w = p.named_matrix("W", 2);
    g = x;
  } else if (kind == "diag") {
    DiagGate x;
    x.k = p.integer("line k");
    x.l = p.integer("line l");
    p.punct('[');
    for (int i = 0; i < 4; ++i) {
      x.d[i] = p.complex();
      if (i < 3) p.punct(',');
    }
    p.punct(']');
    g = x;
  } else if (kind == "mg12") {
    fixed_lines(p, {1, 2}, "lines (1,2) only");
    g = Mg12Gate{p.named_matrix("B", 4)};
  } else if (kind == "u1") {
    fixed_lines(p, {1}, "line 1 only");
    g = U1Gate{p.named_matrix("U", 2)};
  } else if (kind == "exp") {
    g = ExpGate{parse_exp(p, n)};
  } else {
    throw ParseError("unknown gate class '" + kind + "'", p.line(), col);
  }
  p.finish();
  try {
    validate_gate(g, n);
  } catch (const GateClassError& e) {
    throw GateClassError(e.rule(), "line " + std::to_string(p.line()) + ": " +
                                       std::string(e.what()).substr(e.rule().size() + 2));
  }
  return g;
}

}  // namespace

Circuit parse_circuit(std::string_view text) {
  Circuit c;
  bool have_header = false;
  bool have_state = false;
  bool have_measure = false;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t stop = text.find('\n', start);
    if (stop == std::string_view::npos) stop = text.size();
    std::string_view line = text.substr(start, stop - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    start = stop + 1;
    ++line_no;

    LineParser p(line, line_no);
    if (p.empty()) continue;
    const int col = p.column();
    const std::string kw = p.word("a statement");
    if (!have_header) {
      if (kw != "circuit") throw ParseError("file must start with 'circuit n=<int>'", line_no, col);
      p.keyword("n");
      p.punct('=');
      c.n = p.integer("the line count");
      if (c.n < 1) throw ParseError("line count must be positive", line_no, col);
      p.finish();
      have_header = true;
      continue;
    }
    if (have_measure) throw ParseError("'measure' must be the last statement", line_no, col);
    if (kw == "circuit") {
      throw ParseError("duplicate circuit header", line_no, col);
    } else if (kw == "state") {
      if (have_state) throw ParseError("duplicate state", line_no, col);
      if (!c.gates.empty()) throw ParseError("state must precede the gates", line_no, col);
      c.state = parse_state(p, c.n);
      have_state = true;
    } else if (kw == "gate") {
      c.gates.push_back(parse_gate(p, c.n));
    } else if (kw == "measure") {
      const int k = p.integer("the measured line");
      if (k < 1 || k > c.n) {
        throw ParseError("measured line outside 1.." + std::to_string(c.n), line_no, col);
      }
      p.finish();
      c.measure = k;
      have_measure = true;
    } else {
      throw ParseError("unknown statement '" + kw + "'", line_no, col);
    }
  }
  if (!have_header) throw ParseError("missing 'circuit n=<int>' header", line_no, 1);
  if (!have_state) c.state = ProductState::zeros(c.n);
  return c;
}

namespace {

std::string render_matrix(const Eigen::MatrixXcd& m) {
  std::string s = "[";
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    if (r) s += ";";
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (c) s += ",";
      s += render_complex(m(r, c));
    }
  }
  return s + "]";
}

std::string render_qubit(const ProductState::Qubit& q) {
  for (const char* name : kStateNames) {
    if (ProductState::named(name) == q) return name;
  }
  return "(" + render_complex(q[0].real()) + "," + render_complex(q[0].imag()) + ")(" +
         render_complex(q[1].real()) + "," + render_complex(q[1].imag()) + ")";
}

}  // namespace

std::string render_circuit(const Circuit& c) {
  std::ostringstream os;
  os << "circuit n=" << c.n << "\n";
  os << "state";
  for (const auto& q : c.state.qubits()) os << " " << render_qubit(q);
  os << "\n";
  for (const GateRecord& g : c.gates) {
    os << "gate ";
    std::visit(Overloaded{[&](const GvwGate& x) {
                            os << "gvw " << x.k << " V=" << render_matrix(x.v)
                               << " W=" << render_matrix(x.w);
                          },
                          [&](const DiagGate& x) {
                            os << "diag " << x.k << " " << x.l << " [";
                            for (int i = 0; i < 4; ++i) {
                              os << (i ? "," : "") << render_complex(x.d[i]);
                            }
                            os << "]";
                          },
                          [&](const Mg12Gate& x) { os << "mg12 1 2 B=" << render_matrix(x.b); },
                          [&](const U1Gate& x) { os << "u1 1 U=" << render_matrix(x.u); },
                          [&](const ExpGate& x) {
                            os << "exp";
                            for (const auto& [key, v] : x.a.quadratic()) {
                              os << " a[" << key.first << "," << key.second
                                 << "]=" << render_complex(v);
                            }
                            for (const auto& [sigma, v] : x.a.linear()) {
                              os << " b[" << sigma << "]=" << render_complex(v);
                            }
                            if (x.a.s() != 0.0) os << " s=" << render_complex(x.a.s());
                          }},
               g);
    os << "\n";
  }
  os << "measure " << c.measure << "\n";
  return os.str();
}

GateExponent compile_gate(const GateRecord& g, int n) {
  return std::visit(
      Overloaded{[&](const GvwGate& x) { return compile_gvw(x.v, x.w, x.k, n); },
                 [&](const DiagGate& x) { return compile_diag(x.d, x.k, x.l, n); },
                 [&](const Mg12Gate& x) { return compile_mg12(x.b, n); },
                 [&](const U1Gate& x) { return compile_u1(x.u, n); },
                 [&](const ExpGate& x) { return x.a; }},
      g);
}

std::vector<GateExponent> compile(const Circuit& c) {
  std::vector<GateExponent> out;
  out.reserve(c.gates.size());
  for (std::size_t i = 0; i < c.gates.size(); ++i) {
    try {
      out.push_back(compile_gate(c.gates[i], c.n));
    } catch (const Error& e) {
      throw CompileError(static_cast<int>(i), gate_class(c.gates[i]) + ": " + e.what());
    }
  }
  return out;
}

oracle::LocalGate intended_gate(const GateRecord& g, int n) {
  (void)n;
  return std::visit(
      Overloaded{[](const GvwGate& x) {
                   return oracle::LocalGate{g_vw(x.v, x.w), {x.k, x.k + 1}};
                 },
                 [](const DiagGate& x) {
                   return oracle::LocalGate{diag_matrix(x.d), {x.k, x.l}};
                 },
                 // The identities' labelling reads B's first factor as line 2.
                 [](const Mg12Gate& x) { return oracle::LocalGate{x.b, {2, 1}}; },
                 [](const U1Gate& x) { return oracle::LocalGate{x.u, {1}}; },
                 [](const ExpGate& x) { return oracle::exp_gate(x.a); }},
      g);
}

std::vector<oracle::LocalGate> intended_gates(const Circuit& c) {
  std::vector<oracle::LocalGate> out;
  out.reserve(c.gates.size());
  for (const GateRecord& g : c.gates) out.push_back(intended_gate(g, c.n));
  return out;
}

std::vector<std::string> classify_matrix(const Eigen::MatrixXcd& m, double tol) {
  std::vector<std::string> out;
  if (m.rows() == 2 && m.cols() == 2) {
    if (invertible(m)) out.push_back("u1");
    return out;
  }
  if (m.rows() != 4 || m.cols() != 4) {
    throw DimensionError("classify expects a 2x2 or 4x4 matrix");
  }
  if (!invertible(m)) return out;
  const double scale = m.norm();
  auto zero_outside = [&](std::initializer_list<std::pair<int, int>> keep) {
    for (int r = 0; r < 4; ++r) {
      for (int c = 0; c < 4; ++c) {
        bool kept = false;
        for (const auto& [kr, kc] : keep) kept = kept || (kr == r && kc == c);
        if (!kept && std::abs(m(r, c)) > tol * scale) return false;
      }
    }
    return true;
  };
  if (zero_outside({{0, 0}, {1, 1}, {2, 2}, {3, 3}})) {
    try {
      check_diag({m(0, 0), m(1, 1), m(2, 2), m(3, 3)}, tol);
      out.push_back("diag");
    } catch (const GateClassError&) {
    }
  }
  if (zero_outside({{0, 0}, {0, 3}, {3, 0}, {3, 3}, {1, 1}, {1, 2}, {2, 1}, {2, 2}})) {
    Mat2 v;
    Mat2 w;
    v << m(0, 0), m(0, 3), m(3, 0), m(3, 3);
    w << m(1, 1), m(1, 2), m(2, 1), m(2, 2);
    const cplx dv = v.determinant();
    const cplx dw = w.determinant();
    if (std::abs(dv - dw) <= tol * (std::abs(dv) + std::abs(dw))) out.push_back("gvw");
  }
  if (is_matchgate(Mat4(m), tol)) out.push_back("mg12");
  return out;
}

std::string engine_name(Engine e) {
  switch (e) {
    case Engine::quadratic:
      return "quadratic";
    case Engine::lie:
      return "lie";
    case Engine::dense:
      return "dense";
  }
  return "?";
}

SimResult run_circuit(const Circuit& c, const RunOptions& options) {
  const Observable obs = options.observable.value_or(Observable::z(c.measure));
  SimOptions sim;
  sim.c0_mode = options.c0_mode;
  sim.tol = options.tol;
  sim.declared_unitary = c.unitary();
  if (options.heisenberg_mode == oracle::HeisenbergMode::adjoint &&
      options.engine != Engine::dense) {
    throw PreconditionError("the adjoint Heisenberg mode is only available on the dense engine");
  }
  switch (options.engine) {
    case Engine::quadratic:
      return simulate_quadratic(compile(c), c.state, obs, sim);
    case Engine::lie:
      return simulate_lie(compile(c), c.state, obs, sim);
    case Engine::dense:
      return oracle::simulate(intended_gates(c), c.state, obs, options.heisenberg_mode, sim);
  }
  throw std::logic_error("unknown engine");
}

}  // namespace mgsim
