#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>

#include "freeinv/freepoly.hpp"

namespace freeinv {

namespace {

class Parser {
 public:
  Parser(std::string_view text, std::size_t d, char var) : s_(text), d_(d), var_(var) {}

  FreePoly run() {
    skip_ws();
    if (pos_ == s_.size()) throw ParseError("empty polynomial", pos_);
    FreePoly p = expr();
    skip_ws();
    if (pos_ != s_.size()) throw ParseError(std::string("unexpected '") + s_[pos_] + "'", pos_);
    return p;
  }

 private:
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  FreePoly expr() {
    FreePoly acc = term();
    for (;;) {
      if (accept('+'))
        acc += term();
      else if (accept('-'))
        acc -= term();
      else
        return acc;
    }
  }

  FreePoly term() {
    FreePoly acc = unary();
    while (accept('*')) acc = mul(acc, unary());
    return acc;
  }

  FreePoly unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return primary();
  }

  FreePoly primary() {
    skip_ws();
    if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      FreePoly inner = expr();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return inner;
    }
    if (c == var_) return variable();
    if (c == 'i') {
      ++pos_;
      return FreePoly::constant(d_, Complex(0.0, 1.0));
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  FreePoly variable() {
    const std::size_t start = pos_++;
    const std::size_t digits = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (digits == pos_) throw ParseError(std::string("expected index after '") + var_ + "'", pos_);
    unsigned long k = 0;
    auto [ptr, ec] = std::from_chars(s_.data() + digits, s_.data() + pos_, k);
    if (ec != std::errc() || k == 0) throw ParseError("variable index must be >= 1", digits);
    if (k > d_)
      throw ParseError(std::string(1, var_) + std::to_string(k) + " outside alphabet of size " + std::to_string(d_),
                       start);
    return FreePoly::variable(d_, static_cast<Letter>(k - 1));
  }

  FreePoly number() {
    const std::size_t start = pos_;
    auto is_digit = [&](std::size_t i) { return i < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i])); };
    while (is_digit(pos_)) ++pos_;
    if (pos_ < s_.size() && s_[pos_] == '.') {
      ++pos_;
      while (is_digit(pos_)) ++pos_;
    }
    if (pos_ < s_.size() && (s_[pos_] == 'e' || s_[pos_] == 'E')) {
      std::size_t q = pos_ + 1;
      if (q < s_.size() && (s_[q] == '+' || s_[q] == '-')) ++q;
      if (!is_digit(q)) throw ParseError("malformed exponent", pos_);
      pos_ = q;
      while (is_digit(pos_)) ++pos_;
    }
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(s_.data() + start, s_.data() + pos_, value);
    if (ec != std::errc() || ptr != s_.data() + pos_) throw ParseError("malformed number", start);
    if (pos_ < s_.size() && s_[pos_] == 'i') {
      ++pos_;
      return FreePoly::constant(d_, Complex(0.0, value));
    }
    return FreePoly::constant(d_, value);
  }

  std::string_view s_;
  std::size_t d_;
  char var_;
  std::size_t pos_ = 0;
};

std::string format_double(double x) {
  if (x == 0.0) x = 0.0;  // drop the sign of -0
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

}  // namespace

FreePoly parse(std::string_view text, std::size_t alphabet_size, char var) {
  return Parser(text, alphabet_size, var).run();
}

FreePoly parse_infer(std::string_view text, char var) {
  std::size_t d = 1;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != var) continue;
    std::size_t j = i + 1;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    if (j > i + 1) d = std::max<std::size_t>(d, std::strtoul(std::string(text.substr(i + 1, j - i - 1)).c_str(), nullptr, 10));
  }
  return parse(text, d, var);
}

std::string format_complex(Complex c) {
  if (c.imag() == 0.0) return format_double(c.real());
  if (c.real() == 0.0) return format_double(c.imag()) + "i";
  std::string im = format_double(std::abs(c.imag()));
  return "(" + format_double(c.real()) + (c.imag() < 0 ? "-" : "+") + im + "i)";
}

std::string format(const FreePoly& p, char var) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& t : p.terms()) {
    std::string piece;
    if (t.word.empty()) {
      piece = format_complex(t.coeff);
    } else if (t.coeff == Complex(1.0)) {
      piece = t.word.to_string(var);
    } else if (t.coeff == Complex(-1.0)) {
      piece = "-" + t.word.to_string(var);
    } else {
      piece = format_complex(t.coeff) + "*" + t.word.to_string(var);
    }
    if (out.empty())
      out = piece;
    else if (piece.front() == '-')
      out += " - " + piece.substr(1);
    else
      out += " + " + piece;
  }
  return out;
}

}  // namespace freeinv
