#include "cartanlab/expr.hpp"

#include <cctype>
#include <cstdlib>

namespace cartanlab {

DomainError::DomainError(const std::string& fn, const Point& p)
    : std::runtime_error(fn + " out of domain at point (" + std::to_string(p[0]) +
                         ", " + std::to_string(p[1]) + ", " + std::to_string(p[2]) +
                         ", " + std::to_string(p[3]) + ")"),
      point(p) {}

namespace {

class Parser {
 public:
  explicit Parser(const std::string& src) : src_(src) {}

  ScalarField parse() {
    ScalarField f = expr();
    skip_ws();
    if (pos_ != src_.size()) throw ExprError("unexpected trailing input", pos_);
    return f;
  }

 private:
  const std::string& src_;
  std::size_t pos_ = 0;

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_])))
      ++pos_;
  }
  char peek() {
    skip_ws();
    return pos_ < src_.size() ? src_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  ScalarField expr() {
    ScalarField f = term();
    for (;;) {
      if (accept('+'))
        f = f + term();
      else if (accept('-'))
        f = f - term();
      else
        return f;
    }
  }

  ScalarField term() {
    ScalarField f = factor();
    for (;;) {
      if (accept('*'))
        f = f * factor();
      else if (accept('/'))
        f = f / factor();
      else
        return f;
    }
  }

  ScalarField factor() {
    bool neg = accept('-');
    ScalarField f = base();
    if (accept('^')) {
      skip_ws();
      std::size_t start = pos_;
      bool exp_neg = accept('-');
      std::size_t digits = pos_;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
        ++pos_;
      if (pos_ == digits) throw ExprError("expected integer exponent", start);
      int n = std::stoi(src_.substr(digits, pos_ - digits));
      f = field_pow(f, exp_neg ? -n : n);
    }
    return neg ? -f : f;
  }

  ScalarField base() {
    skip_ws();
    if (pos_ >= src_.size()) throw ExprError("unexpected end of expression", pos_);
    char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      ScalarField f = expr();
      if (!accept(')')) throw ExprError("expected ')'", pos_);
      return f;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c))) return identifier();
    throw ExprError(std::string("unexpected character '") + c + "'", pos_);
  }

  ScalarField number() {
    std::size_t start = pos_;
    while (pos_ < src_.size() &&
           (std::isdigit(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '.' ||
            src_[pos_] == 'e' || src_[pos_] == 'E' ||
            ((src_[pos_] == '+' || src_[pos_] == '-') &&
             (src_[pos_ - 1] == 'e' || src_[pos_ - 1] == 'E'))))
      ++pos_;
    std::size_t used = 0;
    double v;
    try {
      v = std::stod(src_.substr(start, pos_ - start), &used);
    } catch (const std::exception&) {
      throw ExprError("malformed number", start);
    }
    if (used != pos_ - start) throw ExprError("malformed number", start);
    return ScalarField::constant(v);
  }

  ScalarField identifier() {
    std::size_t start = pos_;
    while (pos_ < src_.size() &&
           (std::isalnum(static_cast<unsigned char>(src_[pos_]))))
      ++pos_;
    std::string name = src_.substr(start, pos_ - start);
    if (name.size() == 2 && name[0] == 'x' && name[1] >= '0' && name[1] <= '3')
      return ScalarField::coordinate(name[1] - '0');
    if (!accept('(')) {
      if (name == "exp" || name == "ln" || name == "sqrt" || name == "sin" ||
          name == "cos")
        throw ExprError("expected '(' after function name", pos_);
      throw ExprError("unknown identifier '" + name + "'", start);
    }
    ScalarField arg = expr();
    if (!accept(')')) throw ExprError("expected ')'", pos_);
    if (name == "exp") return field_exp(arg);
    if (name == "sin") return field_sin(arg);
    if (name == "cos") return field_cos(arg);
    if (name == "ln" || name == "sqrt") {
      const bool is_log = name == "ln";
      return ScalarField([arg, is_log, name](const Point& q, int k) {
        Jet j = arg.at(q, k);
        if (j.value().real() <= 0.0 || std::abs(j.value().imag()) > 1e-12)
          throw DomainError(name, q);
        return is_log ? jet_log(j) : jet_sqrt(j);
      });
    }
    throw ExprError("unknown function '" + name + "'", start);
  }
};

}  // namespace

ScalarField parse_expression(const std::string& src) { return Parser(src).parse(); }

}  // namespace cartanlab
