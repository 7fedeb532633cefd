#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "nilcollect/collector.hpp"
#include "nilcollect/ints.hpp"

namespace nilcollect {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// Parse tree for group words:
///   word   := factor+
///   factor := atom ('^' signed-integer)?
///   atom   := identifier | '(' word ')' | '[' word (',' word)+ ']'
/// [u,v,w] is left-normed sugar for [[u,v],w]. Juxtaposed single letters are
/// separate generators ("ab" = a b); multi-letter names need separation.
struct Expr {
  enum class Kind { Gen, Product, Power, Bracket };

  Kind kind;
  std::string name;           // Gen
  std::vector<ExprPtr> args;  // Product (>= 2), Bracket (>= 2, left-normed)
  ExprPtr base;               // Power
  Int exp;                    // Power

  static ExprPtr gen(std::string n);
  static ExprPtr product(std::vector<ExprPtr> parts);
  static ExprPtr power(ExprPtr b, Int e);
  static ExprPtr bracket(std::vector<ExprPtr> parts);
};

struct ParseError : std::runtime_error {
  size_t position;
  ParseError(size_t pos, const std::string& msg)
      : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

/// Parses against a set of declared generator names; rejects undeclared
/// identifiers with the offending position.
ExprPtr parse(std::string_view text, const std::vector<std::string>& generators);

/// Inverse of parse: print(parse(t)) reparses to a structurally equal tree.
std::string print(const ExprPtr& e);

bool equal(const ExprPtr& a, const ExprPtr& b);

/// Collected normal form of the expression.
ExponentVector eval(const ExprPtr& e, const GroupContext& ctx);

}  // namespace nilcollect
