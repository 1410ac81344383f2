#include "fqt/definability.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <thread>

#include "fqt/error.hpp"
#include "fqt/factor.hpp"
#include "fqt/text.hpp"

namespace fqt {
namespace {

bool odd_degree(const RatFunc& x) { return x.degree().value() % 2 != 0; }

// Reduced nonzero fractions g/h with deg g, deg h <= bound, h monic.
std::vector<RatFunc> bounded_fractions(const FieldCtx& field, std::size_t bound) {
  std::vector<Poly> dens;
  for (std::size_t d = 0; d <= bound; ++d) {
    for_each_monic(field, d, [&](const Poly& h) { dens.push_back(h); });
  }
  std::vector<RatFunc> out;
  for (const auto& h : dens) {
    for_each_poly(field, bound, [&](const Poly& g) {
      if (g.is_zero() || !gcd(g, h).is_one()) return;
      out.emplace_back(g, h);
    });
  }
  return out;
}

bool ratfunc_less(const RatFunc& a, const RatFunc& b) { return canonical_less(a, b); }

}  // namespace

bool phi_holds(const RatFunc& c) { return square_class_at_infinity(c) == SquareClass::kSquare; }

PsiResult psi_holds(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const Fq z_inv = a.field().inv(a.field().nonsquare());
  // b^(q-1) = d^(q-1) forces d = lambda b, so the parity constraint is on b.
  const bool first = phi_holds(a.scaled(z_inv)) && odd_degree(b);
  const bool second = phi_holds(b.scaled(z_inv)) && odd_degree(a);
  PsiResult out;
  out.holds = first || second;
  if (first && second) {
    out.orientation = Orientation::kBoth;
  } else if (first) {
    out.orientation = Orientation::kFirst;
  } else if (second) {
    out.orientation = Orientation::kSecond;
  }
  return out;
}

BoundedPsiSearch::BoundedPsiSearch(const FieldCtx& field, std::size_t degree_bound)
    : field_(field), candidates_(bounded_fractions(field, degree_bound)) {
  std::sort(candidates_.begin(), candidates_.end(), ratfunc_less);
  by_power_.reserve(candidates_.size());
  for (std::size_t i = 0; i < candidates_.size(); ++i) {
    by_power_.emplace_back(pow(candidates_[i], field.q() - 1), i);
  }
  std::sort(by_power_.begin(), by_power_.end(),
            [](const auto& x, const auto& y) { return ratfunc_less(x.first, y.first); });
}

bool BoundedPsiSearch::disjunct(const RatFunc& scaled, const RatFunc& other) const {
  // scaled = z * w with phi(w); other^(q-1) = v^(q-1); deg w, deg v of opposite parity.
  const RatFunc w = scaled.scaled(field_.inv(field_.nonsquare()));
  if (!std::binary_search(candidates_.begin(), candidates_.end(), w, ratfunc_less)) return false;
  if (!hensel_square_at_infinity(w)) return false;
  const RatFunc target = pow(other, field_.q() - 1);
  auto lo = std::lower_bound(by_power_.begin(), by_power_.end(), target,
                             [](const auto& e, const RatFunc& t) { return ratfunc_less(e.first, t); });
  for (auto it = lo; it != by_power_.end() && it->first == target; ++it) {
    const RatFunc& v = candidates_[it->second];
    if (odd_degree(v) != odd_degree(w)) return true;
  }
  return false;
}

bool BoundedPsiSearch::holds(const RatFunc& a, const RatFunc& b) const {
  if (a.is_zero() || b.is_zero()) return false;
  return disjunct(a, b) || disjunct(b, a);
}

bool d_membership_crosscheck(const RatFunc& a, const RatFunc& b, std::size_t degree_bound) {
  return BoundedPsiSearch(a.field(), degree_bound).holds(a, b);
}

DPair make_dpair(const RatFunc& a, const RatFunc& b) {
  const PsiResult psi = psi_holds(a, b);
  if (!psi.holds) throw DomainError("(" + format(a) + ", " + format(b) + ") is not in D");
  return DPair{a, b, psi.orientation};
}

std::size_t witness_degree_cap(const FieldCtx& field, std::size_t target_degree) {
  return target_degree + 2 * field.q() + 4;
}

WitnessPair witness_pair(const Place& p) {
  if (p.is_infinity()) throw DomainError("witness pairs are defined for finite places only");
  const Poly& f = p.prime();
  const FieldCtx& field = f.field();
  const std::size_t e = p.degree();
  const bool odd_target = e % 2 != 0;
  const std::size_t cap = witness_degree_cap(field, e);

  for (std::size_t degree = odd_target ? 2 : 1; degree <= cap; degree += 2) {
    auto d = find_monic(field, degree, [&](const Poly& candidate) {
      const Poly r = candidate % f;
      if (r.is_zero()) return false;
      if (residue_is_square(r, p) != odd_target) return false;
      return is_irreducible(candidate);
    });
    if (!d) continue;

    const Poly z = Poly::constant(field, field.nonsquare());
    const RatFunc a(z * f);
    const RatFunc b(z * *d);
    RamificationSet delta = delta_set(a, b);
    const std::vector<Place> expected{p, Place::infinity()};
    if (delta.places != expected) {
      throw DomainError("witness for " + format(p) + " failed verification: Delta has " +
                        std::to_string(delta.places.size()) + " places");
    }
    return WitnessPair{make_dpair(a, b), p, *d, std::move(delta)};
  }
  throw DomainError("witness search exceeded cap (degree " + std::to_string(cap) + ") for " +
                    format(p));
}

const WitnessPair& WitnessCache::get(const Place& p) const {
  {
    std::shared_lock lock(mutex_);
    if (auto it = cache_.find(p); it != cache_.end()) return *it->second;
  }
  auto fresh = std::make_unique<WitnessPair>(witness_pair(p));
  std::unique_lock lock(mutex_);
  auto [it, inserted] = cache_.try_emplace(p, std::move(fresh));
  return *it->second;
}

bool r_tilde_contains(const RatFunc& x, const RamificationSet& delta) {
  if (x.is_zero()) return true;
  return std::any_of(delta.places.begin(), delta.places.end(),
                     [&](const Place& v) { return *valuation(x, v) >= 0; });
}

bool r_tilde_contains(const RatFunc& x, const DPair& pair) {
  return r_tilde_contains(x, delta_set(pair.a, pair.b));
}

namespace {

using IndexSet = std::vector<std::size_t>;

struct GridShard {
  std::uint64_t pairs = 0;
  std::set<IndexSet> deltas;
  std::vector<Counterexample> bad;
};

void scan_grid(const std::vector<RatFunc>& elems, const std::vector<LocalProfile>& profiles,
               const PlaceTable& table, std::size_t begin, std::size_t end, std::size_t step,
               std::size_t max_bad, GridShard& out) {
  const std::size_t inf = table.index_of(Place::infinity());
  for (std::size_t i = begin; i < end; i += step) {
    for (std::size_t j = 0; j < elems.size(); ++j) {
      if (!psi_holds(elems[i], elems[j]).holds) continue;
      ++out.pairs;
      IndexSet delta = delta_indices(profiles[i], profiles[j], table);
      const bool has_inf = std::binary_search(delta.begin(), delta.end(), inf);
      if ((!has_inf || delta.size() < 2) && out.bad.size() < max_bad) {
        out.bad.push_back({"", format(elems[i]), format(elems[j]),
                           has_inf ? "Delta has no finite place" : "infinity not in Delta"});
      }
      out.deltas.insert(std::move(delta));
    }
  }
}

}  // namespace

TheoremReport verify_theorem(const FieldCtx& field, std::size_t deg_bound,
                             const VerifyOptions& options) {
  TheoremReport report;
  report.q = field.q();
  report.deg_bound = deg_bound;

  const PlaceTable table = PlaceTable::up_to_degree(field, deg_bound);
  const std::vector<RatFunc> elems = bounded_fractions(field, deg_bound);
  std::vector<LocalProfile> profiles;
  profiles.reserve(elems.size());
  for (const auto& x : elems) profiles.push_back(local_profile(x, table));

  // Constructed witnesses: one per finite prime of degree <= deg_bound.
  WitnessCache witnesses;
  std::set<IndexSet> deltas;
  for (const auto& v : table.places()) {
    if (v.is_infinity()) continue;
    const WitnessPair& w = witnesses.get(v);
    IndexSet idx;
    for (const auto& place : w.delta.places) idx.push_back(table.index_of(place));
    deltas.insert(std::move(idx));
    ++report.witness_pairs;
  }

  // Exhaustive grid of D-pairs.
  const unsigned workers = std::max(1u, options.threads);
  std::vector<GridShard> shards(workers);
  if (workers == 1) {
    scan_grid(elems, profiles, table, 0, elems.size(), 1, options.max_counterexamples, shards[0]);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        scan_grid(elems, profiles, table, w, elems.size(), workers, options.max_counterexamples,
                  shards[w]);
      });
    }
    for (auto& t : pool) t.join();
  }
  for (auto& shard : shards) {
    report.grid_pairs += shard.pairs;
    deltas.merge(shard.deltas);
    for (auto& c : shard.bad) {
      if (report.counterexamples.size() < options.max_counterexamples) {
        report.counterexamples.push_back(std::move(c));
      }
    }
  }
  report.pairs_used = report.grid_pairs + report.witness_pairs;
  report.distinct_delta_sets = deltas.size();

  auto record = [&](Counterexample c) {
    if (report.counterexamples.size() < options.max_counterexamples) {
      report.counterexamples.push_back(std::move(c));
    }
  };

  // x = 0 is a polynomial and lies in every R~.
  ++report.members_checked;
  for (std::size_t n = 0; n < elems.size(); ++n) {
    const RatFunc& x = elems[n];
    const bool member = x.is_polynomial() || x.degree().value() <= 0;
    if (member) {
      ++report.members_checked;
      for (const auto& delta : deltas) {
        const bool inside = std::any_of(delta.begin(), delta.end(), [&](std::size_t i) {
          return profiles[n].valuations[i] >= 0;
        });
        if (!inside) {
          std::string places;
          for (std::size_t i : delta) places += (places.empty() ? "" : ",") + format(table[i]);
          record({format(x), "", "", "member outside R~ for Delta = {" + places + "}"});
        }
      }
      continue;
    }
    ++report.nonmembers_checked;
    const Factorization den = factor(x.den());
    const Place* target = nullptr;
    std::vector<Place> primes;
    for (const auto& pp : den.factors) primes.push_back(Place::trusted(pp.prime));
    for (const auto& v : primes) {
      if (*valuation(x, v) < 0) {
        target = &v;
        break;
      }
    }
    if (target == nullptr) {
      record({format(x), "", "", "non-member without a finite pole"});
      continue;
    }
    const WitnessPair& w = witnesses.get(*target);
    if (r_tilde_contains(x, w.delta)) {
      record({format(x), format(w.pair.a), format(w.pair.b), "non-member not excluded by witness"});
    }
  }
  return report;
}

}  // namespace fqt
