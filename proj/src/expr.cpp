#include "nilcollect/expr.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace nilcollect {

ExprPtr Expr::gen(std::string n) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::Gen;
  e->name = std::move(n);
  return e;
}

ExprPtr Expr::product(std::vector<ExprPtr> parts) {
  if (parts.size() == 1) return parts.front();
  auto e = std::make_shared<Expr>();
  e->kind = Kind::Product;
  e->args = std::move(parts);
  return e;
}

ExprPtr Expr::power(ExprPtr b, Int ex) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::Power;
  e->base = std::move(b);
  e->exp = std::move(ex);
  return e;
}

ExprPtr Expr::bracket(std::vector<ExprPtr> parts) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::Bracket;
  e->args = std::move(parts);
  return e;
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const std::vector<std::string>& generators)
      : text_(text), gens_(generators.begin(), generators.end()) {}

  ExprPtr run() {
    ExprPtr w = word();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError(pos_, "unexpected trailing input");
    return w;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_atom_start() {
    skip_ws();
    if (pos_ >= text_.size()) return false;
    char c = text_[pos_];
    return c == '(' || c == '[' || std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }

  ExprPtr word() {
    std::vector<ExprPtr> factors;
    while (at_atom_start()) factors.push_back(factor());
    if (factors.empty()) throw ParseError(pos_, "expected a word");
    return Expr::product(std::move(factors));
  }

  ExprPtr factor() {
    ExprPtr a = atom();
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      return Expr::power(std::move(a), integer());
    }
    return a;
  }

  ExprPtr atom() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError(pos_, "unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      ExprPtr w = word();
      expect(')');
      return w;
    }
    if (c == '[') {
      ++pos_;
      std::vector<ExprPtr> parts;
      parts.push_back(word());
      expect(',');
      parts.push_back(word());
      skip_ws();
      while (pos_ < text_.size() && text_[pos_] == ',') {
        ++pos_;
        parts.push_back(word());
        skip_ws();
      }
      expect(']');
      return Expr::bracket(std::move(parts));
    }
    return identifier();
  }

  // An alphanumeric run is one generator if it matches a declared name in
  // full; otherwise it is read one letter at a time (juxtaposition).
  ExprPtr identifier() {
    size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    std::string run(text_.substr(start, pos_ - start));
    if (gens_.count(run)) return Expr::gen(run);
    pos_ = start + 1;  // single letter; the rest of the run is parsed as further factors
    std::string one(1, text_[start]);
    if (!gens_.count(one))
      throw ParseError(start, "undeclared generator '" + (run.size() > 1 ? run : one) + "'");
    return Expr::gen(one);
  }

  Int integer() {
    skip_ws();
    size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == digits) throw ParseError(start, "expected an integer exponent");
    return Int(std::string(text_.substr(start, pos_ - start)));
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c)
      throw ParseError(pos_, std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string_view text_;
  std::set<std::string, std::less<>> gens_;
  size_t pos_ = 0;
};

void print_to(const ExprPtr& e, std::string& out) {
  switch (e->kind) {
    case Expr::Kind::Gen:
      out += e->name;
      break;
    case Expr::Kind::Product:
      for (size_t i = 0; i < e->args.size(); ++i) {
        if (i) out += ' ';
        const ExprPtr& a = e->args[i];
        bool parens = a->kind == Expr::Kind::Product;
        if (parens) out += '(';
        print_to(a, out);
        if (parens) out += ')';
      }
      break;
    case Expr::Kind::Power: {
      bool parens = e->base->kind == Expr::Kind::Product || e->base->kind == Expr::Kind::Power ||
                    (e->base->kind == Expr::Kind::Gen && e->base->name.size() > 1);
      if (parens) out += '(';
      print_to(e->base, out);
      if (parens) out += ')';
      out += '^';
      out += to_string(e->exp);
      break;
    }
    case Expr::Kind::Bracket:
      out += '[';
      for (size_t i = 0; i < e->args.size(); ++i) {
        if (i) out += ',';
        print_to(e->args[i], out);
      }
      out += ']';
      break;
  }
}

}  // namespace

ExprPtr parse(std::string_view text, const std::vector<std::string>& generators) {
  return Parser(text, generators).run();
}

std::string print(const ExprPtr& e) {
  std::string out;
  print_to(e, out);
  return out;
}

bool equal(const ExprPtr& a, const ExprPtr& b) {
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case Expr::Kind::Gen:
      return a->name == b->name;
    case Expr::Kind::Power:
      return a->exp == b->exp && equal(a->base, b->base);
    case Expr::Kind::Product:
    case Expr::Kind::Bracket:
      if (a->args.size() != b->args.size()) return false;
      for (size_t i = 0; i < a->args.size(); ++i)
        if (!equal(a->args[i], b->args[i])) return false;
      return true;
  }
  return false;
}

ExponentVector eval(const ExprPtr& e, const GroupContext& ctx) {
  switch (e->kind) {
    case Expr::Kind::Gen:
      return ctx.generator(e->name);
    case Expr::Kind::Product: {
      ExponentVector r = ctx.identity();
      for (const auto& a : e->args) r = ctx.multiply(std::move(r), eval(a, ctx));
      return r;
    }
    case Expr::Kind::Power:
      return ctx.power(eval(e->base, ctx), e->exp);
    case Expr::Kind::Bracket: {
      ExponentVector r = eval(e->args[0], ctx);
      for (size_t i = 1; i < e->args.size(); ++i)
        r = ctx.commutator(r, eval(e->args[i], ctx));
      return r;
    }
  }
  return ctx.identity();
}

}  // namespace nilcollect
