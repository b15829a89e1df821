#include "parse.hpp"

#include <cctype>
#include <sstream>

namespace s4e::cli {

ParseError::ParseError(const std::string &msg, int line, int column)
    : std::invalid_argument("line " + std::to_string(line) + ", column " +
                            std::to_string(column) + ": " + msg),
      line(line), column(column) {}

namespace {

struct Pos {
  std::size_t i = 0;
  int line = 1, col = 1;
};

class Cursor {
public:
  explicit Cursor(const std::string &s) : s_(s) {}

  Pos pos() {
    skip_ws();
    return p_;
  }
  bool at_end() {
    skip_ws();
    return p_.i >= s_.size();
  }
  char peek() {
    skip_ws();
    return p_.i < s_.size() ? s_[p_.i] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    advance();
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'" + found());
  }

  std::string identifier() {
    skip_ws();
    std::string out;
    while (p_.i < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[p_.i])) || s_[p_.i] == '_')) {
      out += s_[p_.i];
      advance();
    }
    if (out.empty()) fail("expected a keyword" + found());
    return out;
  }

  Int integer() {
    skip_ws();
    std::string digits;
    if (p_.i < s_.size() && (s_[p_.i] == '-' || s_[p_.i] == '+')) {
      if (s_[p_.i] == '-') digits += '-';
      advance();
    }
    std::size_t n = 0;
    while (p_.i < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p_.i]))) {
      digits += s_[p_.i];
      advance();
      ++n;
    }
    if (n == 0) fail("expected an integer" + found());
    return Int(digits);
  }

  // num or num/den, den > 0, not reduced
  std::pair<Int, Int> fraction() {
    Int num = integer();
    Int den = 1;
    if (accept('/')) {
      Pos at = pos();
      den = integer();
      if (den <= 0) fail_at(at, "denominator must be positive");
    }
    return {num, den};
  }

  int small_int() {
    Pos at = pos();
    Int v = integer();
    if (!v.fits_sint_p()) fail_at(at, "integer out of range");
    return static_cast<int>(v.get_si());
  }

  void finish() {
    if (!at_end()) fail("unexpected trailing input" + found());
  }

  [[noreturn]] void fail(const std::string &msg) { fail_at(pos(), msg); }
  [[noreturn]] static void fail_at(const Pos &at, const std::string &msg) {
    throw ParseError(msg, at.line, at.col);
  }

private:
  void advance() {
    if (s_[p_.i] == '\n') {
      ++p_.line;
      p_.col = 1;
    } else if ((static_cast<unsigned char>(s_[p_.i]) & 0xC0) != 0x80) {
      ++p_.col; // count UTF-8 lead bytes only
    }
    ++p_.i;
  }
  void skip_ws() {
    while (p_.i < s_.size() && std::isspace(static_cast<unsigned char>(s_[p_.i]))) advance();
  }
  std::string found() {
    if (p_.i >= s_.size()) return ", found end of input";
    return std::string(", found '") + s_[p_.i] + "'";
  }

  const std::string &s_;
  Pos p_;
};

std::string pair_text(const Int &a, const Int &b) {
  return "(" + a.get_str() + "," + b.get_str() + ")";
}

SeifertData seifert(Cursor &c) {
  SeifertData s;
  c.expect('(');
  s.base = c.small_int();
  c.expect(';');
  while (!c.accept(')')) {
    if (!s.pairs.empty()) c.accept(',');
    Pos at = c.pos();
    c.expect('(');
    Int a = c.integer();
    c.expect(',');
    Int b = c.integer();
    c.expect(')');
    if (a < 1) Cursor::fail_at(at, "cone order must be >= 1 in pair " + pair_text(a, b));
    Int g = gcd(a, b);
    if (g != 1)
      Cursor::fail_at(at, "gcd" + pair_text(a, b) + " = " + g.get_str() + ", not 1");
    s.pairs.push_back({a, b});
  }
  return s;
}

std::array<Int, 4> bracket(Cursor &c, const Pos &start) {
  std::array<Int, 4> m;
  c.expect('[');
  m[0] = c.integer();
  c.expect(',');
  m[1] = c.integer();
  c.expect(';');
  m[2] = c.integer();
  c.expect(',');
  m[3] = c.integer();
  c.expect(']');
  Int det = m[0] * m[3] - m[1] * m[2];
  if (det != 1) Cursor::fail_at(start, "determinant is " + det.get_str() + ", not 1");
  return m;
}

LensSum lens(Cursor &c) {
  LensSum l;
  c.expect('(');
  if (c.accept(')')) return l;
  for (;;) {
    int sign = 1;
    if (c.accept('-'))
      sign = -1;
    else
      c.accept('+');
    Pos at = c.pos();
    c.expect('(');
    Int p = c.integer();
    c.expect(',');
    Int q = c.integer();
    c.expect(')');
    if (p < 2) Cursor::fail_at(at, "lens space L" + pair_text(p, q) + " needs p >= 2");
    if (gcd(p, q) != 1)
      Cursor::fail_at(at, "gcd" + pair_text(p, q) + " = " + gcd(p, q).get_str() + ", not 1");
    l.summands.push_back({p, q, sign});
    if (c.accept('#')) continue;
    c.expect(')');
    return l;
  }
}

ManifoldDescription manifold(Cursor &c) {
  Pos start = c.pos();
  std::string kw = c.identifier();
  if (kw == "M") return seifert(c);
  if (kw == "TB") {
    auto m = bracket(c, start);
    return TorusBundle{m[0], m[1], m[2], m[3]};
  }
  if (kw == "NU") {
    auto m = bracket(c, start);
    return GluingMatrix{m[0], m[1], m[2], m[3]};
  }
  if (kw == "LS") return lens(c);
  if (kw == "SB") {
    c.expect('(');
    SphereBundle b;
    b.base = c.small_int();
    c.expect(';');
    b.e = c.integer();
    c.expect(')');
    return b;
  }
  Cursor::fail_at(start, "unknown manifold '" + kw + "', expected M, TB, NU, LS or SB");
}

LinkingPairing pairing(Cursor &c) {
  Pos start = c.pos();
  std::string kw = c.identifier();
  try {
    if (kw == "lw") {
      c.expect('(');
      Pos at = c.pos();
      auto [u, m] = c.fraction();
      c.expect(')');
      if (gcd(u, m) != 1)
        Cursor::fail_at(at, "lw(u/m) needs gcd(u,m) = 1, got " + u.get_str() + "/" + m.get_str());
      return pairing_lw(make_rat(u, m));
    }
    if (kw == "E0" || kw == "E1") {
      c.expect('(');
      int k = c.small_int();
      c.expect(')');
      return pairing_e(k, kw == "E1" ? 1 : 0);
    }
    if (kw == "sum") {
      LinkingPairing out;
      c.expect('(');
      if (c.accept(')')) return out;
      do out = orthogonal_sum(out, pairing(c));
      while (c.accept(','));
      c.expect(')');
      return out;
    }
    if (kw == "neg") {
      c.expect('(');
      auto l = pairing(c);
      c.expect(')');
      return negate(l);
    }
    if (kw == "form") {
      c.expect('(');
      std::vector<Int> orders;
      if (c.peek() != '|') {
        do {
          Pos at = c.pos();
          orders.push_back(c.integer());
          if (orders.back() < 1) Cursor::fail_at(at, "generator order must be >= 1");
        } while (c.accept(','));
      }
      c.expect('|');
      std::vector<std::vector<Rat>> rows;
      if (c.peek() != ')') {
        do {
          rows.emplace_back();
          do {
            auto [a, b] = c.fraction();
            rows.back().push_back(make_rat(a, b));
          } while (c.accept(','));
        } while (c.accept(';'));
      }
      c.expect(')');
      auto l = make_pairing(orders, rows);
      validate(l);
      return l;
    }
  } catch (const PairingError &e) {
    Cursor::fail_at(start, e.what());
  }
  Cursor::fail_at(start, "unknown pairing '" + kw + "', expected lw, E0, E1, sum, neg or form");
}

bool is_manifold_keyword(const std::string &kw) {
  return kw == "M" || kw == "TB" || kw == "NU" || kw == "LS" || kw == "SB";
}

} // namespace

ManifoldDescription parse_manifold(const std::string &text) {
  Cursor c(text);
  auto m = manifold(c);
  c.finish();
  return m;
}

LinkingPairing parse_pairing(const std::string &text) {
  Cursor c(text);
  auto l = pairing(c);
  c.finish();
  return l;
}

Input parse_input(const std::string &text) {
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  std::size_t j = i;
  while (j < text.size() && std::isalnum(static_cast<unsigned char>(text[j]))) ++j;
  if (is_manifold_keyword(text.substr(i, j - i))) return parse_manifold(text);
  return parse_pairing(text);
}

std::string print_manifold(const ManifoldDescription &m) {
  std::ostringstream os;
  std::visit(
      [&](const auto &x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, SeifertData>) {
          os << "M(" << x.base << ";";
          for (const auto &p : x.pairs) os << " (" << p.alpha << "," << p.beta << ")";
          os << ")";
        } else if constexpr (std::is_same_v<T, TorusBundle>) {
          os << "TB[" << x.a << "," << x.b << ";" << x.c << "," << x.d << "]";
        } else if constexpr (std::is_same_v<T, GluingMatrix>) {
          os << "NU[" << x.a << "," << x.b << ";" << x.c << "," << x.d << "]";
        } else if constexpr (std::is_same_v<T, LensSum>) {
          os << "LS(";
          for (std::size_t i = 0; i < x.summands.size(); ++i) {
            const auto &s = x.summands[i];
            os << (i ? " # " : "") << (s.sign < 0 ? "-" : "+") << "(" << s.p << "," << s.q << ")";
          }
          os << ")";
        } else {
          os << "SB(" << x.base << "; " << x.e << ")";
        }
      },
      m);
  return os.str();
}

std::string print_pairing(const LinkingPairing &l) {
  if (l.size() == 0) return "sum()";
  std::ostringstream os;
  os << "form(";
  for (std::size_t i = 0; i < l.size(); ++i) os << (i ? "," : "") << l.orders[i];
  os << " |";
  for (std::size_t i = 0; i < l.size(); ++i) {
    os << (i ? "; " : " ");
    for (std::size_t j = 0; j < l.size(); ++j) os << (j ? "," : "") << to_string(l(i, j).value());
  }
  os << ")";
  return os.str();
}

} // namespace s4e::cli
