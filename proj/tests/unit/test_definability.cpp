#include <gtest/gtest.h>

#include "fqt/definability.hpp"
#include "fqt/error.hpp"
#include "fqt/factor.hpp"
#include "fqt/text.hpp"
#include "support.hpp"

using namespace fqt;

namespace {

RatFunc R(const FieldCtx& F, const char* s) { return parse_ratfunc(F, s); }
Poly P(const FieldCtx& F, const char* s) { return parse_poly(F, s); }
Place fin(const FieldCtx& F, const char* s) { return Place::finite(parse_poly(F, s)); }

// First monic irreducible d, by increasing degree of the right parity and
// canonical order, whose residue mod f is a nonzero square (deg f odd) or a
// nonsquare (deg f even). Brute force throughout.
Poly expected_witness_prime(const Poly& f) {
  std::size_t e = f.size() - 1;
  for (std::size_t deg = (e % 2 == 0) ? 1 : 2;; deg += 2) {
    for (const Poly& d : fqt::testing::trial_irreducibles(f.field(), deg)) {
      Poly r = d % f;
      if (r.is_zero()) continue;
      bool square = fqt::testing::residue_square_by_enumeration(r, f);
      if (square == (e % 2 == 1)) return d;
    }
  }
}

}  // namespace

TEST(Phi, Examples) {
  auto F = make_field(3);
  EXPECT_TRUE(phi_holds(R(*F, "t^2+1")));
  EXPECT_FALSE(phi_holds(R(*F, "t")));
  EXPECT_FALSE(phi_holds(R(*F, "2*t^2+2")));
  EXPECT_TRUE(phi_holds(R(*F, "(t^3+2)/(t+1)")));
  EXPECT_THROW(phi_holds(RatFunc(*F)), DomainError);
}

TEST(Psi, Examples) {
  auto F = make_field(3);
  PsiResult r = psi_holds(R(*F, "2*t"), R(*F, "2*t^2+2"));
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.orientation, Orientation::kSecond);
  r = psi_holds(R(*F, "2*t^2+2"), R(*F, "2*t"));
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.orientation, Orientation::kFirst);
  EXPECT_FALSE(psi_holds(R(*F, "t"), R(*F, "t")).holds);
  EXPECT_FALSE(psi_holds(R(*F, "1"), R(*F, "1")).holds);
  EXPECT_FALSE(psi_holds(RatFunc(*F), R(*F, "t")).holds);
  // a = z c with c = 1/t^2 a square, deg b = 1 and deg a/z = -2 even.
  EXPECT_EQ(psi_holds(R(*F, "2/t^2"), R(*F, "t+1")).orientation, Orientation::kFirst);
  EXPECT_EQ(psi_holds(R(*F, "2*t"), R(*F, "2*t")).orientation, Orientation::kNone);
}

TEST(Psi, CrosscheckExamples) {
  auto F = make_field(3);
  EXPECT_TRUE(d_membership_crosscheck(R(*F, "2*t"), R(*F, "2*t^2+2"), 2));
  EXPECT_FALSE(d_membership_crosscheck(R(*F, "1"), R(*F, "1"), 2));
}

TEST(Psi, AgreesWithBoundedSearchExhaustive) {
  auto F = make_field(3);
  auto all = fqt::testing::nonzero_fractions(*F, 2);
  BoundedPsiSearch search(*F, 2);
  EXPECT_EQ(search.candidate_count(), all.size());
  std::size_t in_d = 0;
  for (const RatFunc& a : all) {
    for (const RatFunc& b : all) {
      bool semantic = psi_holds(a, b).holds;
      ASSERT_EQ(search.holds(a, b), semantic) << format(a) << ", " << format(b);
      in_d += semantic;
    }
  }
  EXPECT_GT(in_d, 0u);
}

TEST(DPair, DeltaContainsInfinityAndAFinitePlace) {
  auto F = make_field(3);
  auto all = fqt::testing::nonzero_fractions(*F, 2);
  for (const RatFunc& a : all) {
    for (const RatFunc& b : all) {
      if (!psi_holds(a, b).holds) continue;
      RamificationSet d = delta_set(a, b);
      ASSERT_TRUE(d.contains(Place::infinity())) << format(a) << ", " << format(b);
      ASSERT_GE(d.places.size(), 2u);
    }
  }
  EXPECT_THROW(make_dpair(R(*F, "t"), R(*F, "t")), DomainError);
  DPair pair = make_dpair(R(*F, "2*t"), R(*F, "2*t^2+2"));
  EXPECT_EQ(pair.orientation, Orientation::kSecond);
}

TEST(Witness, Examples) {
  auto F = make_field(3);
  WitnessPair w = witness_pair(fin(*F, "t"));
  EXPECT_EQ(w.pair.a, R(*F, "2*t"));
  EXPECT_EQ(w.pair.b, R(*F, "2*t^2+2"));
  EXPECT_EQ(w.d, P(*F, "t^2+1"));
  EXPECT_EQ(w.delta.places, (std::vector<Place>{fin(*F, "t"), Place::infinity()}));

  w = witness_pair(fin(*F, "t^2+1"));
  EXPECT_EQ(w.pair.a, R(*F, "2*t^2+2"));
  EXPECT_EQ(w.d, P(*F, "t+1"));
  EXPECT_EQ(w.pair.b, R(*F, "2*t+2"));

  w = witness_pair(fin(*F, "t+1"));
  EXPECT_EQ(w.d, P(*F, "t^2+2*t+2"));
  EXPECT_EQ(w.pair.b, R(*F, "2*t^2+t+1"));

  EXPECT_THROW(witness_pair(Place::infinity()), DomainError);
  EXPECT_EQ(witness_degree_cap(*F, 3), 3u + 2 * 3 + 4);
}

TEST(Witness, PropertiesUpToDegreeFour) {
  for (auto F : {make_field(3), make_field(5)}) {
    Poly z = Poly::constant(*F, F->nonsquare());
    for (std::size_t e = 1; e <= 4; ++e) {
      for (const Poly& f : monic_irreducibles(*F, e)) {
        Place p = Place::trusted(f);
        WitnessPair w = witness_pair(p);
        ASSERT_EQ(w.d, expected_witness_prime(f)) << format(f);
        EXPECT_EQ(w.pair.a, RatFunc(z * f));
        EXPECT_EQ(w.pair.b, RatFunc(z * w.d));
        EXPECT_NE((w.d.size() - 1) % 2, e % 2);
        EXPECT_EQ(delta_set(w.pair.a, w.pair.b).places,
                  (std::vector<Place>{p, Place::infinity()}));
        EXPECT_TRUE(psi_holds(w.pair.a, w.pair.b).holds);
        SymbolValue expected = e % 2 == 1 ? SymbolValue::plus() : SymbolValue::minus();
        EXPECT_EQ(legendre(z, w.d), expected);
        EXPECT_EQ(legendre(f, w.d), expected);
      }
    }
  }
}

TEST(Witness, CacheReturnsSamePair) {
  auto F = make_field(5);
  WitnessCache cache;
  for (const Poly& f : monic_irreducibles(*F, 2)) {
    Place p = Place::trusted(f);
    const WitnessPair& cached = cache.get(p);
    EXPECT_EQ(&cached, &cache.get(p));
    EXPECT_EQ(cached.d, witness_pair(p).d);
  }
}

TEST(RTilde, Examples) {
  auto F = make_field(3);
  DPair pair = witness_pair(fin(*F, "t")).pair;
  EXPECT_TRUE(r_tilde_contains(R(*F, "t"), pair));
  EXPECT_TRUE(r_tilde_contains(R(*F, "1/t"), pair));
  EXPECT_FALSE(r_tilde_contains(R(*F, "(t^2+1)/t"), pair));
  EXPECT_TRUE(r_tilde_contains(RatFunc(*F), pair));
  EXPECT_TRUE(r_tilde_contains(R(*F, "t^2+2*t"), pair));
}

TEST(VerifyTheorem, F3DegreeTwo) {
  auto F = make_field(3);
  TheoremReport r = verify_theorem(*F, 2);
  EXPECT_TRUE(r.counterexamples.empty());
  EXPECT_EQ(r.q, 3u);
  EXPECT_EQ(r.members_checked + r.nonmembers_checked, 243u);
  EXPECT_EQ(r.members_checked, 207u);
  EXPECT_EQ(r.nonmembers_checked, 36u);
  EXPECT_EQ(r.witness_pairs, 6u);
  EXPECT_GT(r.grid_pairs, 0u);
}

TEST(VerifyTheorem, ThreadCountDoesNotChangeReport) {
  auto F = make_field(3);
  TheoremReport one = verify_theorem(*F, 2, {1, 50});
  TheoremReport three = verify_theorem(*F, 2, {3, 50});
  EXPECT_EQ(one.members_checked, three.members_checked);
  EXPECT_EQ(one.pairs_used, three.pairs_used);
  EXPECT_EQ(one.grid_pairs, three.grid_pairs);
  EXPECT_EQ(one.distinct_delta_sets, three.distinct_delta_sets);
}
