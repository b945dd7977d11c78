#include <cctype>
#include <limits>

#include "arcline/error.hpp"
#include "arcline/polycore.hpp"

namespace arcline {
namespace {

constexpr unsigned kMaxExponent = 4096;

class Parser {
 public:
  Parser(std::string_view text, std::optional<unsigned> ambient) : text_(text), ambient_(ambient) {}

  SparsePoly parse() {
    skip_space();
    if (at_end()) throw ParseError(pos_, "empty expression");
    SparsePoly p = sum();
    skip_space();
    if (!at_end()) throw ParseError(pos_, std::string("unexpected character '") + text_[pos_] + "'");
    return p;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (!at_end() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  SparsePoly sum() {
    SparsePoly acc = product();
    for (;;) {
      if (accept('+')) {
        acc += product();
      } else if (accept('-')) {
        acc -= product();
      } else {
        return acc;
      }
    }
  }

  SparsePoly product() {
    SparsePoly acc = unary();
    while (accept('*')) acc *= unary();
    return acc;
  }

  SparsePoly unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  SparsePoly power() {
    SparsePoly base = primary();
    if (accept('^')) {
      skip_space();
      const std::size_t at = pos_;
      BigInt e = integer();
      if (e > kMaxExponent) throw ParseError(at, "exponent too large");
      base = base.pow(static_cast<unsigned>(e.get_ui()));
    }
    return base;
  }

  SparsePoly primary() {
    skip_space();
    if (at_end()) throw ParseError(pos_, "unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      SparsePoly inner = sum();
      if (!accept(')')) throw ParseError(pos_, "expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return SparsePoly::constant(integer());
    if (c == 'x') return variable();
    throw ParseError(pos_, std::string("unexpected character '") + c + "'");
  }

  SparsePoly variable() {
    const std::size_t start = pos_;
    ++pos_;  // 'x'
    if (at_end() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      throw ParseError(pos_, "expected variable index after 'x'");
    }
    const unsigned index = small_integer(start);
    unsigned weight = 0;
    if (!at_end() && text_[pos_] == '_') {
      ++pos_;
      if (at_end() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        throw ParseError(pos_, "expected weight after '_'");
      }
      weight = small_integer(start);
    }
    if (ambient_ && index > *ambient_) {
      throw ParseError(start, "variable x" + std::to_string(index) + " exceeds ambient dimension " +
                                  std::to_string(*ambient_));
    }
    return SparsePoly::variable(index, weight);
  }

  BigInt integer() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError(pos_, "expected integer");
    return BigInt(std::string(text_.substr(start, pos_ - start)));
  }

  unsigned small_integer(std::size_t report_at) {
    BigInt v = integer();
    if (v > std::numeric_limits<unsigned short>::max()) throw ParseError(report_at, "index too large");
    return static_cast<unsigned>(v.get_ui());
  }

  std::string_view text_;
  std::optional<unsigned> ambient_;
  std::size_t pos_ = 0;
};

}  // namespace

SparsePoly parse_poly(std::string_view text, std::optional<unsigned> ambient) {
  return Parser(text, ambient).parse();
}

}  // namespace arcline
