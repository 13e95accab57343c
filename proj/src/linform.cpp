#include "k3cy/linform.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace k3cy {

LinForm LinForm::symbol(std::string_view name, const Rational& coeff) {
  LinForm f;
  f.add_term(name, coeff);
  return f;
}

Rational LinForm::coeff(std::string_view name) const {
  auto it = terms_.find(name);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::vector<std::string> LinForm::symbols() const {
  std::vector<std::string> out;
  out.reserve(terms_.size());
  for (const auto& [name, c] : terms_) out.push_back(name);
  return out;
}

void LinForm::add_term(std::string_view name, const Rational& c) {
  if (c == 0) return;
  auto it = terms_.find(name);
  if (it == terms_.end()) {
    terms_.emplace(std::string(name), c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

LinForm& LinForm::operator+=(const LinForm& rhs) {
  constant_ += rhs.constant_;
  for (const auto& [name, c] : rhs.terms_) add_term(name, c);
  return *this;
}

LinForm& LinForm::operator-=(const LinForm& rhs) {
  constant_ -= rhs.constant_;
  for (const auto& [name, c] : rhs.terms_) add_term(name, -c);
  return *this;
}

LinForm& LinForm::operator*=(const Rational& s) {
  if (s == 0) {
    constant_ = 0;
    terms_.clear();
    return *this;
  }
  constant_ *= s;
  for (auto& [name, c] : terms_) c *= s;
  return *this;
}

LinForm& LinForm::operator/=(const Rational& s) {
  if (s == 0) throw DivisionByZero("LinForm divided by zero");
  constant_ /= s;
  for (auto& [name, c] : terms_) c /= s;
  return *this;
}

LinForm LinForm::operator-() const {
  LinForm f = *this;
  f *= Rational(-1);
  return f;
}

Rational LinForm::eval(const Assignment& values) const {
  Rational acc = constant_;
  for (const auto& [name, c] : terms_) {
    auto it = values.find(name);
    if (it == values.end()) throw UnboundSymbol(name);
    acc += c * it->second;
  }
  return acc;
}

LinForm LinForm::substitute(std::string_view name, const LinForm& replacement) const {
  auto it = terms_.find(name);
  if (it == terms_.end()) return *this;
  LinForm out = *this;
  Rational c = it->second;
  out.terms_.erase(std::string(name));
  out += replacement * c;
  return out;
}

LinForm LinForm::substitute(const std::map<std::string, LinForm, std::less<>>& replacements) const {
  LinForm out(constant_);
  for (const auto& [name, c] : terms_) {
    auto it = replacements.find(name);
    if (it == replacements.end())
      out.add_term(name, c);
    else
      out += it->second * c;
  }
  return out;
}

std::vector<std::string> ordered_symbols(const LinForm& f, std::span<const std::string> order) {
  std::vector<std::string> out;
  for (const auto& s : order)
    if (f.terms().count(s)) out.push_back(s);
  for (const auto& [name, c] : f.terms())
    if (std::find(order.begin(), order.end(), name) == order.end()) out.push_back(name);
  return out;
}

LinForm LinForm::primitive(std::span<const std::string> order) const {
  if (is_zero()) return *this;
  Integer den_lcm = constant_.get_den();
  Integer num_gcd = constant_.get_num();
  for (const auto& [name, c] : terms_) {
    den_lcm = lcm(den_lcm, c.get_den());
    num_gcd = gcd(num_gcd, c.get_num());
  }
  Rational scale(den_lcm, abs(num_gcd));
  scale.canonicalize();
  auto syms = ordered_symbols(*this, order);
  const Rational& lead = syms.empty() ? constant_ : terms_.find(syms.front())->second;
  if (lead < 0) scale = -scale;
  return *this * scale;
}

namespace {

void append_term(std::ostringstream& os, bool first, const Rational& c, const std::string& name) {
  Rational mag = abs(c);
  if (first) {
    if (c < 0) os << "-";
  } else {
    os << (c < 0 ? " - " : " + ");
  }
  if (name.empty()) {
    os << mag.get_str();
  } else if (mag == 1) {
    os << name;
  } else {
    os << mag.get_str() << "*" << name;
  }
}

}  // namespace

std::string LinForm::to_string(std::span<const std::string> order) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& s : ordered_symbols(*this, order)) {
    append_term(os, first, terms_.find(s)->second, s);
    first = false;
  }
  if (constant_ != 0) append_term(os, first, constant_, "");
  return os.str();
}

namespace {

class FormParser {
 public:
  explicit FormParser(std::string_view text) : text_(text) {}

  LinForm parse() {
    LinForm out;
    skip_ws();
    if (pos_ == text_.size()) fail("empty expression");
    bool first = true;
    while (pos_ < text_.size()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      out += term() * Rational(sign);
      first = false;
      skip_ws();
    }
    return out;
  }

 private:
  LinForm term() {
    Rational factor = 1;
    bool have_number = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      factor = number();
      have_number = true;
      skip_ws();
      if (peek() == '/') {
        ++pos_;
        skip_ws();
        factor /= divisor();
        skip_ws();
      }
      if (peek() == '*') {
        ++pos_;
        skip_ws();
      } else if (!is_ident_start(peek())) {
        return LinForm(factor);
      }
    }
    if (!is_ident_start(peek())) fail(have_number ? "expected symbol after '*'" : "expected term");
    std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    std::string name(text_.substr(start, pos_ - start));
    skip_ws();
    if (peek() == '/') {
      ++pos_;
      skip_ws();
      factor /= divisor();
    }
    return LinForm::symbol(name, factor);
  }

  Rational number() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected number");
    Rational q(Integer(std::string(text_.substr(start, pos_ - start))));
    return q;
  }

  Rational divisor() {
    Rational q = number();
    if (q == 0) fail("division by zero");
    return q;
  }

  static bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("cannot parse linear form '" + std::string(text_) + "' at offset " +
                     std::to_string(pos_) + ": " + what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

LinForm parse_linform(std::string_view text) {
  return FormParser(text).parse();
}

}  // namespace k3cy
