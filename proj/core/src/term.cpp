#include "loopkit/term.hpp"

#include <algorithm>

namespace loopkit {

Term Term::var(char name) { return Term(std::make_shared<const Node>(Node{Kind::Var, name, nullptr, nullptr})); }

Term Term::one() { return Term(std::make_shared<const Node>(Node{Kind::One, 0, nullptr, nullptr})); }

Term Term::mul(Term left, Term right) {
  return Term(std::make_shared<const Node>(
      Node{Kind::Mul, 0, std::make_shared<const Term>(std::move(left)), std::make_shared<const Term>(std::move(right))}));
}

Term Term::ldiv(Term left, Term right) {
  return Term(std::make_shared<const Node>(
      Node{Kind::LDiv, 0, std::make_shared<const Term>(std::move(left)), std::make_shared<const Term>(std::move(right))}));
}

Term Term::rdiv(Term left, Term right) {
  return Term(std::make_shared<const Node>(
      Node{Kind::RDiv, 0, std::make_shared<const Term>(std::move(left)), std::make_shared<const Term>(std::move(right))}));
}

Term Term::rho(Term arg) {
  return Term(std::make_shared<const Node>(Node{Kind::RhoInv, 0, std::make_shared<const Term>(std::move(arg)), nullptr}));
}

Term Term::lambda(Term arg) {
  return Term(std::make_shared<const Node>(Node{Kind::LambdaInv, 0, std::make_shared<const Term>(std::move(arg)), nullptr}));
}

bool Term::is_binary() const noexcept {
  return kind() == Kind::Mul || kind() == Kind::LDiv || kind() == Kind::RDiv;
}

bool Term::is_unary() const noexcept { return kind() == Kind::RhoInv || kind() == Kind::LambdaInv; }

std::size_t Term::size() const {
  if (is_binary()) return 1 + left().size() + right().size();
  if (is_unary()) return 1 + left().size();
  return 1;
}

void Term::collect_vars(std::vector<char>& out) const {
  switch (kind()) {
    case Kind::Var:
      if (std::find(out.begin(), out.end(), name()) == out.end()) out.push_back(name());
      return;
    case Kind::One:
      return;
    case Kind::RhoInv:
    case Kind::LambdaInv:
      left().collect_vars(out);
      return;
    default:
      left().collect_vars(out);
      right().collect_vars(out);
  }
}

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  if (a.kind() == Term::Kind::Var) return a.name() == b.name();
  if (a.kind() == Term::Kind::One) return true;
  if (a.is_unary()) return a.left() == b.left();
  return a.left() == b.left() && a.right() == b.right();
}

Identity make_identity(Term lhs, Term rhs) {
  std::vector<char> vars;
  lhs.collect_vars(vars);
  rhs.collect_vars(vars);
  std::sort(vars.begin(), vars.end());
  return Identity{std::move(lhs), std::move(rhs), std::move(vars)};
}

std::string render(const Term& term) {
  switch (term.kind()) {
    case Term::Kind::Var:
      return std::string(1, term.name());
    case Term::Kind::One:
      return "1";
    case Term::Kind::Mul:
      return "(" + render(term.left()) + "*" + render(term.right()) + ")";
    case Term::Kind::LDiv:
      return "(" + render(term.left()) + "\\" + render(term.right()) + ")";
    case Term::Kind::RDiv:
      return "(" + render(term.left()) + "/" + render(term.right()) + ")";
    case Term::Kind::RhoInv:
      return render(term.left()) + "^rho";
    case Term::Kind::LambdaInv:
      return render(term.left()) + "^lambda";
  }
  return {};
}

std::string render(const Identity& identity) { return render(identity.lhs) + " = " + render(identity.rhs); }

Term mirror(const Term& term) {
  switch (term.kind()) {
    case Term::Kind::Var:
    case Term::Kind::One:
      return term;
    case Term::Kind::Mul:
      return Term::mul(mirror(term.right()), mirror(term.left()));
    case Term::Kind::LDiv:
      return Term::rdiv(mirror(term.right()), mirror(term.left()));
    case Term::Kind::RDiv:
      return Term::ldiv(mirror(term.right()), mirror(term.left()));
    case Term::Kind::RhoInv:
      return Term::lambda(mirror(term.left()));
    case Term::Kind::LambdaInv:
      return Term::rho(mirror(term.left()));
  }
  return term;
}

Identity mirror(const Identity& identity) {
  return Identity{mirror(identity.lhs), mirror(identity.rhs), identity.vars};
}

}  // namespace loopkit
