#include "hsos/parser.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <string>
#include <vector>

namespace hsos {

namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) {}

  HermitianPoly run() {
    skip_ws();
    HermitianPoly result = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return result;
  }

 private:
  const std::string& text_;
  size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) const { fail_at(msg, pos_); }

  [[noreturn]] void fail_at(const std::string& msg, size_t at) const {
    int line = 1, col = 1;
    for (size_t i = 0; i < at && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(msg, line, col);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      skip_ws();
      return true;
    }
    return false;
  }

  void expect(char c, const char* what) {
    if (!accept(c)) fail(std::string("expected '") + c + "' " + what);
  }

  bool accept_word(const char* w) {
    size_t n = std::char_traits<char>::length(w);
    if (text_.compare(pos_, n, w) != 0) return false;
    // A word token must not run into further identifier characters, so that
    // "zbar" is not read as "z" followed by garbage.
    char after = pos_ + n < text_.size() ? text_[pos_ + n] : '\0';
    if (std::isalnum(static_cast<unsigned char>(after)) || after == '_') return false;
    pos_ += n;
    skip_ws();
    return true;
  }

  HermitianPoly expr() {
    bool negate = false;
    if (accept('-')) {
      negate = true;
    } else {
      accept('+');
    }
    HermitianPoly acc = term();
    if (negate) acc = -acc;
    for (;;) {
      if (accept('+')) {
        acc = acc + term();
      } else if (accept('-')) {
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  HermitianPoly term() {
    size_t at = pos_;
    HermitianPoly acc = factor();
    while (accept('*')) {
      at = pos_;
      try {
        acc = mul(acc, factor());
      } catch (const SizeError& e) {
        fail_at(e.what(), at);
      }
    }
    return acc;
  }

  HermitianPoly factor() {
    HermitianPoly b = base();
    if (!accept('^')) return b;
    size_t at = pos_;
    long long e = exponent();
    // Repeated squaring; the degree check up front keeps intermediate
    // matrices within the global cap and makes the error a parse error with
    // a position instead of a failure deep inside mul().
    if (b.deg() > 0 && e > kMaxDegree / b.deg()) {
      fail_at("exponent overflow: result degree exceeds " + std::to_string(kMaxDegree), at);
    }
    try {
      HermitianPoly acc = HermitianPoly::constant(1.0);
      HermitianPoly sq = b;
      while (e > 0) {
        if (e & 1) acc = mul(acc, sq);
        e >>= 1;
        if (e > 0) sq = mul(sq, sq);
      }
      return acc;
    } catch (const std::invalid_argument&) {
      fail_at("numeric overflow while expanding power", at);
    }
  }

  long long exponent() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) {
      fail("expected a nonnegative integer exponent after '^'");
    }
    size_t at = pos_;
    long long value = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
    if (ec == std::errc::result_out_of_range) fail_at("exponent overflow", at);
    pos_ = ptr - text_.data();
    char c = peek();
    if (c == '.' || c == 'e' || c == 'E') fail("non-integer exponent");
    skip_ws();
    return value;
  }

  HermitianPoly base() {
    if (accept_word("zbar")) return HermitianPoly::monomial(1, 0);
    if (accept_word("conj")) {
      expect('(', "after 'conj'");
      if (!accept_word("z")) fail("expected 'z' inside conj(...)");
      expect(')', "to close conj(...)");
      return HermitianPoly::monomial(1, 0);
    }
    if (accept_word("z")) return HermitianPoly::monomial(0, 1);
    char c = peek();
    if (c == '(') {
      size_t at = pos_;
      Complex lit;
      if (complex_literal(&lit)) return HermitianPoly::constant(lit);
      pos_ = at;
      accept('(');
      HermitianPoly inner = expr();
      expect(')', "to close the parenthesized expression");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      return HermitianPoly::constant(real_literal());
    }
    if (c == '\0') fail("unexpected end of input");
    fail(std::string("unexpected character '") + c + "'");
  }

  // Attempts '(' real ('+'|'-') real 'i' ')'. Returns false (without
  // consuming input commitment — the caller rewinds) when the text is a
  // parenthesized expression instead.
  bool complex_literal(Complex* out) {
    if (!accept('(')) return false;
    double re, im_mag;
    if (!try_real(&re, /*allow_sign=*/true)) return false;
    int sign;
    if (accept('+')) {
      sign = 1;
    } else if (accept('-')) {
      sign = -1;
    } else {
      return false;
    }
    if (!try_real(&im_mag, /*allow_sign=*/false)) return false;
    if (!accept_word("i")) return false;
    if (!accept(')')) return false;
    *out = Complex(re, sign * im_mag);
    return true;
  }

  bool try_real(double* out, bool allow_sign) {
    size_t save = pos_;
    bool neg = false;
    if (allow_sign && peek() == '-') {
      neg = true;
      ++pos_;
      skip_ws();
    }
    char c = peek();
    if (!std::isdigit(static_cast<unsigned char>(c)) && c != '.') {
      pos_ = save;
      return false;
    }
    double value = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
    if (ec != std::errc() || !std::isfinite(value)) {
      pos_ = save;
      return false;
    }
    pos_ = ptr - text_.data();
    skip_ws();
    *out = neg ? -value : value;
    return true;
  }

  double real_literal() {
    size_t at = pos_;
    double value = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
    if (ec == std::errc::result_out_of_range || !std::isfinite(value)) {
      fail_at("number out of range", at);
    }
    if (ec != std::errc()) fail_at("malformed number", at);
    pos_ = ptr - text_.data();
    skip_ws();
    return value;
  }
};

void append_number(std::string* out, double x) { *out += format_double(x); }

// Coefficient and monomial for one term; coefficient magnitude 1 elides the
// "1*" prefix so integer-matrix polynomials print the way people write them.
void append_term(std::string* out, Complex c, int j, int k) {
  std::string coeff;
  if (c.imag() == 0.0) {
    append_number(&coeff, c.real());
  } else {
    coeff += '(';
    append_number(&coeff, c.real());
    coeff += c.imag() < 0 ? '-' : '+';
    append_number(&coeff, std::abs(c.imag()));
    coeff += "i)";
  }
  std::string mono;
  if (k > 0) {
    mono += 'z';
    if (k > 1) mono += '^' + std::to_string(k);
  }
  if (j > 0) {
    if (!mono.empty()) mono += '*';
    mono += "zbar";
    if (j > 1) mono += '^' + std::to_string(j);
  }
  if (mono.empty()) {
    *out += coeff;
  } else if (coeff == "1") {
    *out += mono;
  } else {
    *out += coeff + '*' + mono;
  }
}

}  // namespace

HermitianPoly parse(const std::string& text) {
  try {
    return Parser(text).run();
  } catch (const SizeError& e) {
    // Expansion overflow outside an explicitly tracked spot (e.g. repeated
    // '*' chains) still surfaces as a parse error.
    throw ParseError(e.what(), 1, 1);
  }
}

std::string format(const HermitianPoly& f) {
  std::string out;
  // Term order: total degree j+k ascending, then conjugate exponent j.
  for (int total = 0; total <= 2 * f.deg(); ++total) {
    for (int j = std::max(0, total - f.deg()); j <= std::min(total, f.deg()); ++j) {
      const int k = total - j;
      Complex c = f.coeff(j, k);
      if (c == Complex(0.0)) continue;
      if (out.empty()) {
        if (c.imag() == 0.0 && c.real() < 0) {
          out += '-';
          c = -c;
        }
      } else if (c.imag() == 0.0 && c.real() < 0) {
        out += " - ";
        c = -c;
      } else {
        out += " + ";
      }
      append_term(&out, c, j, k);
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace hsos
