#include "superbialg/parse.hpp"

#include <cctype>
#include <cstdlib>

namespace superbialg {

std::string to_text(const Rational& q) { return q.to_string(); }
std::string to_text(const HalfInt& h) { return h.to_string(); }
std::string to_text(const Generator& g) { return g.to_string(); }

namespace {

std::string key_text(const Generator& g) { return g.to_string(); }
std::string key_text(const Key2& k) {
  return k.first.to_string() + " (x) " + k.second.to_string();
}
std::string key_text(const Key3& k) {
  return std::get<0>(k).to_string() + " (x) " + std::get<1>(k).to_string() +
         " (x) " + std::get<2>(k).to_string();
}

template <typename Key>
std::string combo_text(const LinearCombo<Key>& v) {
  if (v.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : v) {
    const bool neg = c.sign() < 0;
    if (first) {
      if (neg) out += "-";
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    out += c.abs().to_string();
    out += " ";
    out += key_text(k);
  }
  return out;
}

/// Single-pass recursive-descent parser over the term grammar.
class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) {}

  Expression parse() {
    skip_ws();
    if (done()) throw err("empty expression");
    // Leading sign of the first term.
    Rational sign(1);
    if (peek() == '-' || peek() == '+') {
      if (take() == '-') sign = Rational(-1);
      skip_ws();
    }
    if (peek() == '0' && is_bare_zero()) {
      return Element{};  // the zero combination, rank-agnostic
    }
    Element e;
    Tensor2 t2;
    Tensor3 t3;
    rank_ = 0;
    parse_term(sign, e, t2, t3);
    skip_ws();
    while (!done()) {
      char op = take();
      if (op != '+' && op != '-') {
        throw err(std::string("expected '+' or '-', found '") + op + "'");
      }
      skip_ws();
      parse_term(Rational(op == '-' ? -1 : 1), e, t2, t3);
      skip_ws();
    }
    switch (rank_) {
      case 1:
        return e;
      case 2:
        return t2;
      default:
        return t3;
    }
  }

 private:
  bool done() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  char take() { return text_[pos_++]; }
  void skip_ws() {
    while (!done() && (peek() == ' ' || peek() == '\t' || peek() == '\n')) {
      ++pos_;
    }
  }
  ParseError err(const std::string& what) const {
    return ParseError(what, pos_ + 1);
  }

  bool is_bare_zero() {
    std::size_t save = pos_;
    ++pos_;  // consume '0'
    skip_ws();
    bool bare = done();
    if (!bare) pos_ = save;
    return bare;
  }

  long parse_digits() {
    if (done() || !std::isdigit(static_cast<unsigned char>(peek()))) {
      throw err("expected a number");
    }
    long v = 0;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (take() - '0');
    }
    return v;
  }

  Rational parse_rational() {
    long num = parse_digits();
    if (!done() && peek() == '/') {
      ++pos_;
      long den = parse_digits();
      if (den == 0) throw err("zero denominator");
      return Rational(num, den);
    }
    return Rational(num);
  }

  HalfInt parse_index() {
    bool neg = false;
    if (!done() && peek() == '-') {
      neg = true;
      ++pos_;
    }
    long n = parse_digits();
    if (neg) n = -n;
    if (!done() && peek() == '/') {
      ++pos_;
      std::size_t den_pos = pos_;
      long den = parse_digits();
      if (den != 2) {
        throw ParseError("index denominator must be 2", den_pos + 1);
      }
      return HalfInt::from_twice(n);
    }
    return HalfInt(n);
  }

  Generator parse_generator() {
    std::size_t start = pos_;
    if (done()) throw err("expected a generator");
    char k = take();
    Kind kind;
    switch (k) {
      case 'L':
        kind = Kind::L;
        break;
      case 'T':
        kind = Kind::T;
        break;
      case 'G':
        kind = Kind::G;
        break;
      default:
        throw ParseError(std::string("expected generator kind L/T/G, found '") +
                             k + "'",
                         start + 1);
    }
    if (done() || take() != '[') throw err("expected '['");
    HalfInt idx = parse_index();
    if (done() || take() != ']') throw err("expected ']'");
    if (!is_valid_generator(kind, idx)) {
      Generator g{kind, idx};
      throw IndexDomainError("invalid index in token '" + g.to_string() +
                             "' at position " + std::to_string(start + 1) +
                             (kind == Kind::L ? " (L needs an integer index)"
                                              : " (T needs a half-odd index)"));
    }
    return Generator{kind, idx};
  }

  bool try_tensor_sep() {
    std::size_t save = pos_;
    skip_ws();
    if (!done() && peek() == '(') {
      if (pos_ + 2 < text_.size() && text_[pos_ + 1] == 'x' &&
          text_[pos_ + 2] == ')') {
        pos_ += 3;
        skip_ws();
        return true;
      }
      throw ParseError("expected '(x)'", pos_ + 1);
    }
    pos_ = save;
    return false;
  }

  void parse_term(const Rational& sign, Element& e, Tensor2& t2, Tensor3& t3) {
    std::size_t term_pos = pos_;
    Rational c = parse_rational() * sign;
    skip_ws();
    Generator g1 = parse_generator();
    int rank = 1;
    Generator g2, g3;
    if (try_tensor_sep()) {
      g2 = parse_generator();
      rank = 2;
      if (try_tensor_sep()) {
        g3 = parse_generator();
        rank = 3;
      }
    }
    if (rank_ == 0) {
      rank_ = rank;
    } else if (rank_ != rank) {
      throw ParseError("term of tensor rank " + std::to_string(rank) +
                           " in an expression of rank " + std::to_string(rank_),
                       term_pos + 1);
    }
    switch (rank) {
      case 1:
        e.add_term(g1, c);
        break;
      case 2:
        t2.add_term(Key2{g1, g2}, c);
        break;
      default:
        t3.add_term(Key3{g1, g2, g3}, c);
        break;
    }
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  int rank_ = 0;
};

}  // namespace

std::string to_text(const Element& e) { return combo_text(e); }
std::string to_text(const Tensor2& t) { return combo_text(t); }
std::string to_text(const Tensor3& t) { return combo_text(t); }

std::string to_text(const Expression& e) {
  return std::visit([](const auto& v) { return to_text(v); }, e);
}

Expression parse_expression(const std::string& text) {
  return Parser(text).parse();
}

Element parse_element(const std::string& text) {
  Expression e = parse_expression(text);
  if (auto* v = std::get_if<Element>(&e)) return *v;
  throw ParseError("expected an element, found a tensor", 1);
}

Tensor2 parse_tensor2(const std::string& text) {
  Expression e = parse_expression(text);
  if (auto* v = std::get_if<Tensor2>(&e)) return *v;
  if (auto* z = std::get_if<Element>(&e); z && z->is_zero()) return Tensor2{};
  throw ParseError("expected a rank-2 tensor", 1);
}

Tensor3 parse_tensor3(const std::string& text) {
  Expression e = parse_expression(text);
  if (auto* v = std::get_if<Tensor3>(&e)) return *v;
  if (auto* z = std::get_if<Element>(&e); z && z->is_zero()) return Tensor3{};
  throw ParseError("expected a rank-3 tensor", 1);
}

HalfInt parse_halfint(const std::string& text) {
  std::size_t i = 0;
  bool neg = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    neg = text[i] == '-';
    ++i;
  }
  std::size_t start = i;
  long n = 0;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
    n = n * 10 + (text[i] - '0');
    ++i;
  }
  if (i == start) throw ParseError("expected a half-integer", i + 1);
  if (neg) n = -n;
  if (i < text.size() && text[i] == '/') {
    ++i;
    if (i < text.size() && text[i] == '2' && i + 1 == text.size()) {
      return HalfInt::from_twice(n);
    }
    throw ParseError("half-integer denominator must be 2", i + 1);
  }
  if (i != text.size()) throw ParseError("trailing characters", i + 1);
  return HalfInt(n);
}

}  // namespace superbialg
