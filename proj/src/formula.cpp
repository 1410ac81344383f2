#include "fqt/formula.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "fqt/error.hpp"

namespace fqt {

Term Term::var(std::string name) {
  return Term(std::make_shared<const Node>(Node{Kind::kVar, std::move(name), 0, {}}));
}

Term Term::integer(std::int64_t n) {
  return Term(std::make_shared<const Node>(Node{Kind::kInt, {}, n, {}}));
}

Term Term::t() { return Term(std::make_shared<const Node>(Node{Kind::kT, {}, 0, {}})); }

Term Term::pow(Term base, std::uint32_t exponent) {
  return Term(std::make_shared<const Node>(Node{Kind::kPow, {}, exponent, {std::move(base)}}));
}

Term Term::binary(Kind kind, Term a, Term b) {
  return Term(std::make_shared<const Node>(Node{kind, {}, 0, {std::move(a), std::move(b)}}));
}

Formula Formula::make(Node node) { return Formula(std::make_shared<const Node>(std::move(node))); }

Formula Formula::truth() { return make(Node{Kind::kTrue, {}, {}, {}}); }
Formula Formula::falsity() { return make(Node{Kind::kFalse, {}, {}, {}}); }

Formula Formula::eq(Term lhs, Term rhs) {
  return make(Node{Kind::kEq, {}, {}, {std::move(lhs), std::move(rhs)}});
}

Formula Formula::conj(std::vector<Formula> parts) {
  if (parts.empty()) return truth();
  if (parts.size() == 1) return parts.front();
  return make(Node{Kind::kAnd, {}, std::move(parts), {}});
}

Formula Formula::disj(std::vector<Formula> parts) {
  if (parts.empty()) return falsity();
  if (parts.size() == 1) return parts.front();
  return make(Node{Kind::kOr, {}, std::move(parts), {}});
}

Formula Formula::exists(std::string var, Formula body) {
  return make(Node{Kind::kExists, std::move(var), {std::move(body)}, {}});
}

Formula Formula::forall(std::string var, Formula body) {
  return make(Node{Kind::kForall, std::move(var), {std::move(body)}, {}});
}

Formula Formula::exists_block(const std::vector<std::string>& vars, Formula body) {
  for (auto it = vars.rbegin(); it != vars.rend(); ++it) body = exists(*it, std::move(body));
  return body;
}

Formula Formula::forall_block(const std::vector<std::string>& vars, Formula body) {
  for (auto it = vars.rbegin(); it != vars.rend(); ++it) body = forall(*it, std::move(body));
  return body;
}

Formula Formula::opaque(std::string name, std::vector<Term> args, unsigned budget,
                        Polarity polarity, bool negated) {
  Node node{Kind::kOpaque, std::move(name), {}, std::move(args)};
  node.budget = budget;
  node.polarity = polarity;
  node.negated = negated;
  return make(std::move(node));
}

Formula operator!(const Formula& f) {
  return Formula::make(Formula::Node{Formula::Kind::kNot, {}, {f}, {}});
}

unsigned occurrence_count(const Formula& f) {
  unsigned n = 0;
  switch (f.kind()) {
    case Formula::Kind::kExists:
    case Formula::Kind::kForall:
      n = 1;
      break;
    case Formula::Kind::kOpaque:
      return f.budget();
    default:
      break;
  }
  for (const Formula& c : f.children()) n += occurrence_count(c);
  return n;
}

namespace {

Polarity flip(Polarity p) {
  return p == Polarity::kExistential ? Polarity::kUniversal : Polarity::kExistential;
}

Formula nnf(const Formula& f, bool negate) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::kTrue:
      return negate ? Formula::falsity() : f;
    case K::kFalse:
      return negate ? Formula::truth() : f;
    case K::kEq:
      return negate ? !f : f;
    case K::kNot:
      return nnf(f.children()[0], !negate);
    case K::kAnd:
    case K::kOr: {
      std::vector<Formula> parts;
      for (const Formula& c : f.children()) parts.push_back(nnf(c, negate));
      bool conj = (f.kind() == K::kAnd) != negate;
      return conj ? Formula::conj(std::move(parts)) : Formula::disj(std::move(parts));
    }
    case K::kExists:
    case K::kForall: {
      Formula body = nnf(f.children()[0], negate);
      bool ex = (f.kind() == K::kExists) != negate;
      return ex ? Formula::exists(f.name(), std::move(body))
                : Formula::forall(f.name(), std::move(body));
    }
    case K::kOpaque: {
      if (!negate) return f;
      std::vector<Term> args(f.terms().begin(), f.terms().end());
      return Formula::opaque(f.name(), std::move(args), f.budget(), flip(f.polarity()),
                             !f.negated());
    }
  }
  throw std::logic_error("unreachable formula kind");
}

bool fits(PrefixClass c, PrefixClass block) {
  return c == PrefixClass::kQuantifierFree || c == block;
}

PrefixShape shape_of(unsigned count, PrefixClass block) {
  return count == 0 ? PrefixShape{} : PrefixShape{block, count};
}

PrefixShape shape(const Formula& f) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::kTrue:
    case K::kFalse:
    case K::kEq:
      return {};
    case K::kNot:
      // Only reached for negated equations in NNF.
      return shape(f.children()[0]);
    case K::kOpaque:
      return shape_of(f.budget(), f.polarity() == Polarity::kExistential
                                      ? PrefixClass::kExistential
                                      : PrefixClass::kUniversal);
    case K::kExists:
    case K::kForall: {
      PrefixClass block = f.kind() == K::kExists ? PrefixClass::kExistential
                                                 : PrefixClass::kUniversal;
      PrefixShape body = shape(f.children()[0]);
      return {fits(body.cls, block) ? block : PrefixClass::kMixed, body.count + 1};
    }
    case K::kAnd:
    case K::kOr: {
      std::vector<PrefixShape> parts;
      for (const Formula& c : f.children()) parts.push_back(shape(c));
      unsigned sum = 0, max = 0;
      bool all_ex = true, all_un = true;
      for (const PrefixShape& s : parts) {
        sum += s.count;
        max = std::max(max, s.count);
        all_ex = all_ex && fits(s.cls, PrefixClass::kExistential);
        all_un = all_un && fits(s.cls, PrefixClass::kUniversal);
      }
      bool is_and = f.kind() == K::kAnd;
      if (all_ex) return shape_of(is_and ? sum : max, PrefixClass::kExistential);
      if (all_un) return shape_of(is_and ? max : sum, PrefixClass::kUniversal);
      return {PrefixClass::kMixed, sum};
    }
  }
  throw std::logic_error("unreachable formula kind");
}

void collect_free(const Term& t, std::set<std::string>& out) {
  if (t.kind() == Term::Kind::kVar) out.insert(t.name());
  for (const Term& a : t.args()) collect_free(a, out);
}

void collect_free(const Formula& f, std::set<std::string>& out) {
  for (const Term& t : f.terms()) collect_free(t, out);
  if (f.kind() == Formula::Kind::kExists || f.kind() == Formula::Kind::kForall) {
    std::set<std::string> inner;
    collect_free(f.children()[0], inner);
    inner.erase(f.name());
    out.insert(inner.begin(), inner.end());
    return;
  }
  for (const Formula& c : f.children()) collect_free(c, out);
}

void print(const Term& t, std::ostream& os) {
  switch (t.kind()) {
    case Term::Kind::kVar:
      os << t.name();
      return;
    case Term::Kind::kInt:
      os << t.value();
      return;
    case Term::Kind::kT:
      os << 't';
      return;
    case Term::Kind::kPow:
      os << "(^ ";
      print(t.args()[0], os);
      if (t.value() == Term::kFieldOrder) {
        os << " q)";
      } else {
        os << ' ' << t.value() << ')';
      }
      return;
    case Term::Kind::kAdd:
    case Term::Kind::kSub:
    case Term::Kind::kMul:
      os << '(' << (t.kind() == Term::Kind::kAdd   ? '+'
                    : t.kind() == Term::Kind::kSub ? '-'
                                                   : '*');
      for (const Term& a : t.args()) {
        os << ' ';
        print(a, os);
      }
      os << ')';
      return;
  }
}

void print(const Formula& f, std::ostream& os) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::kTrue:
      os << "true";
      return;
    case K::kFalse:
      os << "false";
      return;
    case K::kEq:
      os << "(= ";
      print(f.terms()[0], os);
      os << ' ';
      print(f.terms()[1], os);
      os << ')';
      return;
    case K::kNot:
      os << "(not ";
      print(f.children()[0], os);
      os << ')';
      return;
    case K::kAnd:
    case K::kOr:
      os << (f.kind() == K::kAnd ? "(and" : "(or");
      for (const Formula& c : f.children()) {
        os << ' ';
        print(c, os);
      }
      os << ')';
      return;
    case K::kExists:
    case K::kForall:
      os << (f.kind() == K::kExists ? "(exists " : "(forall ") << f.name() << ' ';
      print(f.children()[0], os);
      os << ')';
      return;
    case K::kOpaque:
      os << "(opaque " << f.name() << ' ' << f.budget() << ' '
         << (f.polarity() == Polarity::kExistential ? "exists" : "forall");
      if (f.negated()) os << " negated";
      for (const Term& a : f.terms()) {
        os << ' ';
        print(a, os);
      }
      os << ')';
      return;
  }
}

}  // namespace

Formula to_nnf(const Formula& f) { return nnf(f, false); }

PrefixShape prefix_shape(const Formula& f) { return shape(to_nnf(f)); }

unsigned quantifier_count(const Formula& f) { return prefix_shape(f).count; }

std::string to_string(PrefixClass cls) {
  switch (cls) {
    case PrefixClass::kQuantifierFree:
      return "quantifier-free";
    case PrefixClass::kExistential:
      return "existential";
    case PrefixClass::kUniversal:
      return "universal";
    case PrefixClass::kMixed:
      return "mixed";
  }
  return "mixed";
}

std::set<std::string> free_variables(const Formula& f) {
  std::set<std::string> out;
  collect_free(f, out);
  return out;
}

std::set<std::string> free_variables(const Term& t) {
  std::set<std::string> out;
  collect_free(t, out);
  return out;
}

std::string to_sexpr(const Term& t) {
  std::ostringstream os;
  print(t, os);
  return os.str();
}

std::string to_sexpr(const Formula& f) {
  std::ostringstream os;
  print(f, os);
  return os.str();
}

// ---------------------------------------------------------------------------
// Evaluation

bool degree_at_least(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) return true;
  if (a.is_zero()) return false;
  return a.degree() >= b.degree();
}

BoundedEvaluator::BoundedEvaluator(const FieldCtx& field, std::vector<RatFunc> domain)
    : field_(field), domain_(std::move(domain)) {}

void BoundedEvaluator::define_atom(const std::string& name, AtomSemantics semantics) {
  atoms_[name] = std::move(semantics);
}

RatFunc BoundedEvaluator::eval_term(const Term& t, const Env& env) const {
  switch (t.kind()) {
    case Term::Kind::kVar:
      for (auto it = env.rbegin(); it != env.rend(); ++it) {
        if (it->first == t.name()) return it->second;
      }
      throw DomainError("unbound variable " + t.name());
    case Term::Kind::kInt: {
      std::int64_t r = t.value() % static_cast<std::int64_t>(field_.p());
      if (r < 0) r += field_.p();
      return RatFunc::constant(field_, field_.from_int(static_cast<std::uint32_t>(r)));
    }
    case Term::Kind::kT:
      return RatFunc(Poly::t(field_));
    case Term::Kind::kPow: {
      std::int64_t e = t.value() == Term::kFieldOrder ? field_.q() : t.value();
      return pow(eval_term(t.args()[0], env), e);
    }
    case Term::Kind::kAdd:
      return eval_term(t.args()[0], env) + eval_term(t.args()[1], env);
    case Term::Kind::kSub:
      return eval_term(t.args()[0], env) - eval_term(t.args()[1], env);
    case Term::Kind::kMul:
      return eval_term(t.args()[0], env) * eval_term(t.args()[1], env);
  }
  throw std::logic_error("unreachable term kind");
}

bool BoundedEvaluator::eval(const Formula& f, Env env) const { return eval_in(f, env); }

bool BoundedEvaluator::eval_in(const Formula& f, Env& env) const {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::kTrue:
      return true;
    case K::kFalse:
      return false;
    case K::kEq:
      return eval_term(f.terms()[0], env) == eval_term(f.terms()[1], env);
    case K::kNot:
      return !eval_in(f.children()[0], env);
    case K::kAnd:
      for (const Formula& c : f.children()) {
        if (!eval_in(c, env)) return false;
      }
      return true;
    case K::kOr:
      for (const Formula& c : f.children()) {
        if (eval_in(c, env)) return true;
      }
      return false;
    case K::kExists:
    case K::kForall: {
      bool ex = f.kind() == K::kExists;
      env.emplace_back(f.name(), RatFunc(field_));
      bool result = !ex;
      for (const RatFunc& x : domain_) {
        env.back().second = x;
        if (eval_in(f.children()[0], env) == ex) {
          result = ex;
          break;
        }
      }
      env.pop_back();
      return result;
    }
    case K::kOpaque: {
      auto it = atoms_.find(f.name());
      if (it == atoms_.end()) throw DomainError("no semantics for atom " + f.name());
      std::vector<RatFunc> args;
      args.reserve(f.terms().size());
      for (const Term& t : f.terms()) args.push_back(eval_term(t, env));
      return it->second(args) != f.negated();
    }
  }
  throw std::logic_error("unreachable formula kind");
}

// ---------------------------------------------------------------------------
// Builders

namespace {

Term v(const std::string& name) { return Term::var(name); }
Term sq(const Term& x) { return Term::pow(x, 2); }

Formula deg_ge(const Term& a, const Term& b, const std::vector<Term>& params) {
  std::vector<Term> args{a, b};
  args.insert(args.end(), params.begin(), params.end());
  return Formula::opaque(kDegGe, std::move(args), kDegreeBudget, Polarity::kExistential);
}

// w in c * K^2 * T^x, via one square witness.
Formula in_scaled(const Term& w, const Term& c, const Term& a, const Term& b,
                  const std::string& s) {
  return Formula::exists(
      s, Formula::opaque(kScaledTUnits, {w, c * sq(v(s)), a, b}, kTUnitsBudget,
                         Polarity::kExistential));
}

// w in 1 - K^2 * T^x.
Formula in_shifted(const Term& w, const Term& a, const Term& b, const std::string& s) {
  return Formula::exists(
      s, Formula::opaque(kScaledTUnits, {Term::integer(1) - w, sq(v(s)), a, b}, kTUnitsBudget,
                         Polarity::kExistential));
}

}  // namespace

Formula build_s_ab(const Term& x, const Term& a, const Term& b, const std::string& prefix) {
  const std::string x2 = prefix + "x2", x3 = prefix + "x3", x4 = prefix + "x4";
  Term four = Term::integer(4);
  Term lhs = sq(x) - four * a * sq(v(x2)) - four * b * sq(v(x3)) + four * a * b * sq(v(x4));
  return Formula::exists_block({x2, x3, x4}, Formula::eq(lhs, four));
}

Formula build_t_ab(const Term& x, const Term& a, const Term& b) {
  return Formula::exists("s", build_s_ab(v("s"), a, b, "l_") && build_s_ab(x - v("s"), a, b, "r_"));
}

Formula build_t_units(const Term& x, const Term& a, const Term& b) {
  return Formula::opaque(kTUnits, {x, a, b}, kTUnitsBudget, Polarity::kExistential);
}

Formula build_jacobson(const Term& x, const Term& a, const Term& b) {
  Term y1 = v("y1"), y2 = v("y2");
  std::vector<Formula> parts;
  int n = 0;
  auto fresh = [&n] { return "s" + std::to_string(++n); };
  for (const auto& [y, c] : {std::pair{y1, a}, std::pair{y2, b}}) {
    for (const Term& w : {y, x - y}) {
      parts.push_back(in_scaled(w, c, a, b, fresh()));
      parts.push_back(in_shifted(w, a, b, fresh()));
    }
  }
  Formula nonzero = Formula::neq(x, Term::integer(0));
  return Formula::eq(x, Term::integer(0)) ||
         (nonzero && Formula::exists_block({"y1", "y2"}, Formula::conj(std::move(parts))));
}

Formula build_chi(const Term& c, const Term& d, const Term& z,
                  const std::vector<Term>& atom_params) {
  Term f = v("f1"), h = v("h1"), t = Term::t();
  Term th2d = t * sq(h) * d;
  Formula approx = deg_ge(th2d, t * (c - sq(f)), atom_params);
  Formula k_one = deg_ge(sq(f), t * (sq(f) - th2d), atom_params);
  Formula k_z = deg_ge(sq(f), t * (sq(f) - z * th2d), atom_params);
  return Formula::exists_block({"f1", "h1"}, approx && (k_one || k_z));
}

Formula build_psi(const Term& a, const Term& b, const Term& z,
                  const std::vector<Term>& atom_params) {
  return build_chi(z * a, b, z, atom_params) || build_chi(z * b, a, z, atom_params);
}

Formula build_r_tilde(const Term& x, const Term& a, const Term& b) {
  Term w = v("w");
  return Formula::forall(
      "w", Formula::neq(x * w, Term::integer(1)) || !build_jacobson(w, a, b));
}

bool QuantifierReport::consistent() const {
  unsigned sum = 0;
  for (const QuantifierItem& item : items) sum += item.count;
  return sum == total;
}

namespace {

// sum_i c_i alpha^i with integer coefficients.
Term alpha_polynomial(std::span<const std::uint32_t> coeffs, const Term& alpha) {
  std::vector<Term> terms;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) continue;
    Term power = i == 0 ? Term::integer(1) : i == 1 ? alpha : Term::pow(alpha, i);
    terms.push_back(coeffs[i] == 1 ? power : Term::integer(coeffs[i]) * power);
  }
  if (terms.empty()) return Term::integer(0);
  Term sum = terms.front();
  for (std::size_t i = 1; i < terms.size(); ++i) sum = sum + terms[i];
  return sum;
}

}  // namespace

UniversalDefinition build_universal_definition(const FieldCtx& field, bool empty_params) {
  Term f = v("f"), a = v("a"), b = v("b");
  Term alpha = v("alpha");
  Term z = empty_params ? alpha_polynomial(field.coordinates(field.nonsquare()), alpha) : v("z");
  std::vector<Term> atom_params;
  if (empty_params) atom_params.push_back(alpha);

  Formula psi = build_psi(a, b, z, atom_params);
  Formula jac = build_jacobson(v("w"), a, b);
  Formula r_tilde = build_r_tilde(f, a, b);
  Formula body = !psi || r_tilde;
  Formula phi = Formula::forall_block({"a", "b"}, body);

  std::vector<Term> deg_args{f};
  deg_args.insert(deg_args.end(), atom_params.begin(), atom_params.end());
  Formula deg_pos =
      Formula::opaque(kDegPositive, std::move(deg_args), kDegreeBudget, Polarity::kUniversal);
  Formula restriction = deg_pos || Formula::eq(Term::pow(f, Term::kFieldOrder), f);
  Formula defined = phi && restriction;

  Formula full = defined;
  if (empty_params) {
    Term m = alpha_polynomial(field.modulus(), alpha);
    full = Formula::forall("alpha", Formula::neq(m, Term::integer(0)) || defined);
  }

  QuantifierReport report;
  unsigned n_phi = quantifier_count(phi);
  unsigned n_defined = quantifier_count(defined);
  unsigned n_full = quantifier_count(full);
  unsigned n_psi = quantifier_count(!psi);
  unsigned n_jac = quantifier_count(!jac);
  unsigned n_r_extra = quantifier_count(r_tilde) - quantifier_count(jac);
  report.items.push_back({"forall a, b", n_phi - quantifier_count(body)});
  report.items.push_back({"not psi(a, b)", n_psi});
  report.items.push_back({"J(R~_{a,b}) (negated)", n_jac});
  report.items.push_back({"R~_{a,b} over J", n_r_extra});
  report.items.push_back({"restriction deg(f) > 0 or f^q = f", n_defined - n_phi});
  if (empty_params) report.items.push_back({"alpha", n_full - n_defined});
  report.total = n_full;
  report.phi_total = n_phi;
  report.restriction_budget = quantifier_count(restriction);
  report.restricted_total = std::max(n_phi, report.restriction_budget);
  report.prenex_class = prefix_shape(full).cls;
  if (!empty_params) report.parameters.push_back("z");
  report.notes.push_back(
      "chi has three degree atoms; the two alternatives for k share one existential block, "
      "so chi costs 2 + 9 + 9");
  report.notes.push_back("k ranges over {1, z}, one representative per square class of F_q^x");
  report.notes.push_back(
      "each membership in J uses one square witness and one T^x atom of budget 7");
  return {std::move(full), std::move(report), "f"};
}

}  // namespace fqt
