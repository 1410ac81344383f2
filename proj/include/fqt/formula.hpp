#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fqt/ratfunc.hpp"

namespace fqt {

/// Term of the ring language {0, 1, +, -, *} with the constant t. Integer
/// literals and powers are abbreviations and cost no quantifiers.
class Term {
 public:
  enum class Kind { kVar, kInt, kT, kAdd, kSub, kMul, kPow };
  /// Exponent value standing for the field order q in kPow nodes.
  static constexpr std::uint32_t kFieldOrder = 0;

  static Term var(std::string name);
  static Term integer(std::int64_t n);
  static Term t();
  static Term pow(Term base, std::uint32_t exponent);

  Kind kind() const { return node_->kind; }
  const std::string& name() const { return node_->name; }
  std::int64_t value() const { return node_->value; }
  std::span<const Term> args() const { return node_->args; }

  friend Term operator+(Term a, Term b) { return binary(Kind::kAdd, std::move(a), std::move(b)); }
  friend Term operator-(Term a, Term b) { return binary(Kind::kSub, std::move(a), std::move(b)); }
  friend Term operator*(Term a, Term b) { return binary(Kind::kMul, std::move(a), std::move(b)); }

 private:
  struct Node {
    Kind kind;
    std::string name;
    std::int64_t value = 0;  // integer literal or exponent
    std::vector<Term> args;
  };
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Term binary(Kind kind, Term a, Term b);

  std::shared_ptr<const Node> node_;
};

enum class Polarity { kExistential, kUniversal };

/// First-order formula. Opaque atoms stand for subformulas defined elsewhere
/// and carry the number of quantifiers their definition uses; negating one
/// flips its polarity and keeps its budget.
class Formula {
 public:
  enum class Kind { kTrue, kFalse, kEq, kNot, kAnd, kOr, kExists, kForall, kOpaque };

  static Formula truth();
  static Formula falsity();
  static Formula eq(Term lhs, Term rhs);
  static Formula neq(Term lhs, Term rhs) { return !eq(std::move(lhs), std::move(rhs)); }
  static Formula conj(std::vector<Formula> parts);
  static Formula disj(std::vector<Formula> parts);
  static Formula exists(std::string var, Formula body);
  static Formula forall(std::string var, Formula body);
  static Formula exists_block(const std::vector<std::string>& vars, Formula body);
  static Formula forall_block(const std::vector<std::string>& vars, Formula body);
  static Formula opaque(std::string name, std::vector<Term> args, unsigned budget,
                        Polarity polarity, bool negated = false);

  Kind kind() const { return node_->kind; }
  /// Bound variable of a quantifier, or name of an opaque atom.
  const std::string& name() const { return node_->name; }
  std::span<const Formula> children() const { return node_->children; }
  /// Sides of an equation, or arguments of an opaque atom.
  std::span<const Term> terms() const { return node_->terms; }
  unsigned budget() const { return node_->budget; }
  Polarity polarity() const { return node_->polarity; }
  bool negated() const { return node_->negated; }

  friend Formula operator!(const Formula& f);
  friend Formula operator&&(Formula a, Formula b) { return conj({std::move(a), std::move(b)}); }
  friend Formula operator||(Formula a, Formula b) { return disj({std::move(a), std::move(b)}); }

 private:
  struct Node {
    Kind kind;
    std::string name;
    std::vector<Formula> children;
    std::vector<Term> terms;
    unsigned budget = 0;
    Polarity polarity = Polarity::kExistential;
    bool negated = false;
  };
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Formula make(Node node);

  std::shared_ptr<const Node> node_;
};

/// Explicit quantifiers plus opaque budgets, once per occurrence.
unsigned occurrence_count(const Formula& f);

/// Negation normal form: negations only on equations; opaque atoms absorb them.
Formula to_nnf(const Formula& f);

enum class PrefixClass { kQuantifierFree, kExistential, kUniversal, kMixed };

/// Length of the quantifier prefix of an equivalent prenex formula, letting
/// like blocks share variables: ∃x A ∨ ∃x B ≡ ∃x (A ∨ B) and
/// ∀x A ∧ ∀x B ≡ ∀x (A ∧ B). Conjunctions of existential parts and
/// disjunctions of universal parts add up.
struct PrefixShape {
  PrefixClass cls = PrefixClass::kQuantifierFree;
  unsigned count = 0;
};

PrefixShape prefix_shape(const Formula& f);
/// prefix_shape(f).count: the number of quantifiers f costs.
unsigned quantifier_count(const Formula& f);
std::string to_string(PrefixClass cls);

std::set<std::string> free_variables(const Formula& f);
std::set<std::string> free_variables(const Term& t);

/// Deterministic s-expression form.
std::string to_sexpr(const Term& t);
std::string to_sexpr(const Formula& f);

/// Evaluates formulas over F_q(t) with quantifiers ranging over a finite
/// domain. Opaque atoms need registered semantics. Only sound as a check of
/// formulas whose witnesses are known to lie in the domain.
class BoundedEvaluator {
 public:
  using Env = std::vector<std::pair<std::string, RatFunc>>;
  using AtomSemantics = std::function<bool(std::span<const RatFunc>)>;

  BoundedEvaluator(const FieldCtx& field, std::vector<RatFunc> domain);

  void define_atom(const std::string& name, AtomSemantics semantics);
  bool eval(const Formula& f, Env env) const;
  RatFunc eval_term(const Term& t, const Env& env) const;

 private:
  bool eval_in(const Formula& f, Env& env) const;

  const FieldCtx& field_;
  std::vector<RatFunc> domain_;
  std::map<std::string, AtomSemantics> atoms_;
};

/// Semantics of the opaque degree atom deg_ge(A, B): v_inf(B/A) >= 0, with
/// B = 0 always satisfying it and A = 0 (B != 0) never.
bool degree_at_least(const RatFunc& a, const RatFunc& b);

// Opaque atom names used by the builders.
inline constexpr const char* kDegGe = "deg_ge";            // deg(A) >= deg(B), 9 quantifiers
inline constexpr const char* kDegPositive = "deg_pos";     // deg(f) > 0, 9 quantifiers
inline constexpr const char* kScaledTUnits = "in_scaled_T_units";  // u in v * T^x_{a,b}
inline constexpr const char* kTUnits = "T_units";          // x in T^x_{a,b}, 7 quantifiers
inline constexpr unsigned kDegreeBudget = 9;
inline constexpr unsigned kTUnitsBudget = 7;

/// S_{a,b} = {2 x1 : x1^2 - a x2^2 - b x3^2 + ab x4^2 = 1}, written for
/// x = 2 x1 as x^2 - 4a x2^2 - 4b x3^2 + 4ab x4^2 = 4. Free: x, a, b.
Formula build_s_ab(const Term& x = Term::var("x"), const Term& a = Term::var("a"),
                   const Term& b = Term::var("b"), const std::string& prefix = "");
/// T_{a,b} = S_{a,b} + S_{a,b}. Free: x, a, b.
Formula build_t_ab(const Term& x = Term::var("x"), const Term& a = Term::var("a"),
                   const Term& b = Term::var("b"));
/// T^x_{a,b} as an opaque existential atom of budget 7.
Formula build_t_units(const Term& x = Term::var("x"), const Term& a = Term::var("a"),
                      const Term& b = Term::var("b"));
/// J(R~_{a,b}): {0} u {x != 0 : exists y1, y2 with y1, x - y1 in
/// a K^2 T^x n (1 - K^2 T^x) and y2, x - y2 in b K^2 T^x n (1 - K^2 T^x)}.
Formula build_jacobson(const Term& x = Term::var("x"), const Term& a = Term::var("a"),
                       const Term& b = Term::var("b"));
/// chi(c, d): deg c even, deg d odd, lc(c) a square; z is the nonsquare.
Formula build_chi(const Term& c, const Term& d, const Term& z,
                  const std::vector<Term>& atom_params = {});
/// psi(a, b) = chi(z a, b) v chi(z b, a). Free: a, b, z.
Formula build_psi(const Term& a = Term::var("a"), const Term& b = Term::var("b"),
                  const Term& z = Term::var("z"), const std::vector<Term>& atom_params = {});
/// R~_{a,b} = {x : forall w (x w != 1 v w not in J)}.
Formula build_r_tilde(const Term& x = Term::var("f"), const Term& a = Term::var("a"),
                      const Term& b = Term::var("b"));

struct QuantifierItem {
  std::string name;
  unsigned count;
};

struct QuantifierReport {
  std::vector<QuantifierItem> items;
  unsigned total = 0;
  /// Count of the definition of F_q[t] u O_inf before the restriction step.
  unsigned phi_total = 0;
  /// Budget of the universal degree atom in the restriction to F_q[t].
  unsigned restriction_budget = 0;
  /// max{phi_total, restriction_budget}.
  unsigned restricted_total = 0;
  PrefixClass prenex_class = PrefixClass::kMixed;
  std::vector<std::string> parameters;
  std::vector<std::string> notes;

  /// total equals the sum of the items.
  bool consistent() const;
};

struct UniversalDefinition {
  Formula formula;
  QuantifierReport report;
  std::string subject;  // the defined variable, "f"
};

/// Universal definition of F_q[t] in F_q(t). With parameters the nonsquare z
/// is free; without, z and the degree atoms' parameters are written in a
/// universally quantified root alpha of the field's defining polynomial.
UniversalDefinition build_universal_definition(const FieldCtx& field, bool empty_params);

}  // namespace fqt
