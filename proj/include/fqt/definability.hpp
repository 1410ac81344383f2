#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <shared_mutex>
#include <string>
#include <vector>

#include "fqt/ramification.hpp"

namespace fqt {

/// c is a square in F_q((1/t)): even degree and square leading coefficient.
/// Throws DomainError on zero.
bool phi_holds(const RatFunc& c);

/// Which disjunct of psi holds: first is {phi(c), a = z c, b ~ d}, second is
/// {phi(d), b = z d, a ~ c}.
enum class Orientation { kNone, kFirst, kSecond, kBoth };

struct PsiResult {
  bool holds = false;
  Orientation orientation = Orientation::kNone;
};

/// Membership of (a, b) in D, decided from square classes at infinity: the
/// first disjunct holds iff a/z is a square at infinity and deg(b) is odd,
/// the second symmetrically. False when either argument is zero.
PsiResult psi_holds(const RatFunc& a, const RatFunc& b);

/// Evaluates psi's raw existential definition with witnesses c, d drawn from
/// the reduced fractions whose numerator and denominator have degree <= bound.
/// phi is decided by Hensel lifting at infinity, not by square classes.
class BoundedPsiSearch {
 public:
  BoundedPsiSearch(const FieldCtx& field, std::size_t degree_bound);

  bool holds(const RatFunc& a, const RatFunc& b) const;
  std::size_t candidate_count() const { return candidates_.size(); }

 private:
  // Disjunct with the square-at-infinity witness solving scaled = z * w.
  bool disjunct(const RatFunc& scaled, const RatFunc& other) const;

  const FieldCtx& field_;
  std::vector<RatFunc> candidates_;  // canonical order
  // (candidate^(q-1), candidate index), ordered by the power
  std::vector<std::pair<RatFunc, std::size_t>> by_power_;
};

/// One-shot form of BoundedPsiSearch.
bool d_membership_crosscheck(const RatFunc& a, const RatFunc& b, std::size_t degree_bound);

/// A pair satisfying psi.
struct DPair {
  RatFunc a;
  RatFunc b;
  Orientation orientation;
};

/// Throws DomainError when psi(a, b) fails.
DPair make_dpair(const RatFunc& a, const RatFunc& b);

/// (a, b) = (z f, z d) with Delta_{a,b} = {(f), inf}.
struct WitnessPair {
  DPair pair;
  Place target;
  Poly d;
  RamificationSet delta;
};

/// Upper bound on the degree of the auxiliary prime d for a target of degree e.
std::size_t witness_degree_cap(const FieldCtx& field, std::size_t target_degree);

/// Scans monic irreducible d of degree parity opposite to deg f, degrees
/// increasing, canonical order within a degree: d must be a nonzero square
/// mod f when deg f is odd and a nonsquare when deg f is even. The result is
/// checked (Delta = {p, inf}, psi holds) before returning. Throws DomainError
/// for an infinite place or when the search passes witness_degree_cap.
WitnessPair witness_pair(const Place& p);

/// Thread-safe memo of witness_pair keyed by place.
class WitnessCache {
 public:
  const WitnessPair& get(const Place& p) const;

 private:
  mutable std::shared_mutex mutex_;
  mutable std::map<Place, std::unique_ptr<WitnessPair>> cache_;
};

/// x lies in the union of the valuation rings of the places of delta.
/// Zero is always contained.
bool r_tilde_contains(const RatFunc& x, const RamificationSet& delta);
bool r_tilde_contains(const RatFunc& x, const DPair& pair);

struct Counterexample {
  std::string x;
  std::string a;
  std::string b;
  std::string reason;
};

struct TheoremReport {
  std::uint32_t q = 0;
  std::size_t deg_bound = 0;
  std::uint64_t members_checked = 0;
  std::uint64_t nonmembers_checked = 0;
  std::uint64_t pairs_used = 0;
  std::uint64_t grid_pairs = 0;
  std::uint64_t witness_pairs = 0;
  std::uint64_t distinct_delta_sets = 0;
  std::vector<Counterexample> counterexamples;
};

struct VerifyOptions {
  unsigned threads = 1;
  std::size_t max_counterexamples = 50;
};

/// Exhaustive desk-scale check of F_q[t] u O_inf = intersection of R~_{a,b}
/// over (a, b) in D, for x = g/h with deg g, deg h <= deg_bound. Members are
/// checked against every witness pair for primes of degree <= deg_bound and
/// every D-pair of the grid of fractions with numerator and denominator degree
/// <= deg_bound; non-members must be excluded by the witness at a prime of h.
TheoremReport verify_theorem(const FieldCtx& field, std::size_t deg_bound,
                             const VerifyOptions& options = {});

}  // namespace fqt
