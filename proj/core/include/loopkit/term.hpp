#pragma once

#include <memory>
#include <string>
#include <vector>

namespace loopkit {

/// Immutable expression over loop operations. Copies share structure.
class Term {
 public:
  enum class Kind { Var, One, Mul, LDiv, RDiv, RhoInv, LambdaInv };

  static Term var(char name);
  static Term one();
  static Term mul(Term left, Term right);
  static Term ldiv(Term left, Term right);
  static Term rdiv(Term left, Term right);
  static Term rho(Term arg);
  static Term lambda(Term arg);

  Kind kind() const noexcept { return node_->kind; }
  /// Only meaningful for Kind::Var.
  char name() const noexcept { return node_->name; }
  /// Left operand of a binary node, or the argument of an inverse.
  const Term& left() const { return *node_->left; }
  /// Right operand of a binary node.
  const Term& right() const { return *node_->right; }

  bool is_binary() const noexcept;
  bool is_unary() const noexcept;

  /// Number of nodes in the tree.
  std::size_t size() const;

  /// Appends each variable once, in order of first occurrence.
  void collect_vars(std::vector<char>& out) const;

  friend bool operator==(const Term& a, const Term& b);

 private:
  struct Node {
    Kind kind;
    char name = 0;
    std::shared_ptr<const Term> left;
    std::shared_ptr<const Term> right;
  };

  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

/// A universally quantified equation lhs = rhs.
struct Identity {
  Term lhs;
  Term rhs;
  /// Quantified variables in ascending character order; a superset of the
  /// variables in lhs and rhs.
  std::vector<char> vars;

  friend bool operator==(const Identity&, const Identity&) = default;
};

/// Builds an identity quantified over exactly the variables it mentions.
Identity make_identity(Term lhs, Term rhs);

/// Fully parenthesized rendering, e.g. "(x*(y*z))" or "(x*y)^rho".
std::string render(const Term& term);
std::string render(const Identity& identity);

/// Reads terms left to right: (a*b) becomes (b'*a'), a\b becomes b'/a',
/// a/b becomes b'\a', and rho and lambda swap. An identity holds in a loop
/// exactly when its mirror holds in the opposite loop.
Term mirror(const Term& term);
Identity mirror(const Identity& identity);

}  // namespace loopkit
