#include <gtest/gtest.h>

#include "fqt/error.hpp"
#include "fqt/factor.hpp"
#include "fqt/local.hpp"
#include "fqt/text.hpp"
#include "support.hpp"

using namespace fqt;
using fqt::testing::Gen;

namespace {

Poly P(const FieldCtx& F, const char* s) { return parse_poly(F, s); }
RatFunc R(const FieldCtx& F, const char* s) { return parse_ratfunc(F, s); }
Place fin(const FieldCtx& F, const char* s) { return Place::finite(P(F, s)); }
const Place kInf = Place::infinity();

}  // namespace

TEST(Place, ValidatesPrimes) {
  auto F = make_field(3);
  EXPECT_EQ(fin(*F, "t^2+1").degree(), 2u);
  EXPECT_EQ(kInf.degree(), 1u);
  try {
    fin(*F, "t^2+2");
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("divisible by t+1"), std::string::npos);
  }
  EXPECT_THROW(fin(*F, "2*t"), DomainError);
  EXPECT_THROW(fin(*F, "1"), DomainError);
  EXPECT_LT(fin(*F, "t+2"), fin(*F, "t^2+1"));
  EXPECT_LT(fin(*F, "t^5+2*t+1"), kInf);
  EXPECT_EQ(parse_place(*F, "inf"), kInf);
  EXPECT_EQ(format(parse_place(*F, "t^2+1")), "t^2+1");
}

TEST(Valuation, Examples) {
  auto F = make_field(3);
  EXPECT_EQ(valuation(R(*F, "t"), fin(*F, "t")), 1);
  EXPECT_EQ(valuation(R(*F, "1/t"), kInf), 1);
  RatFunc x = R(*F, "(t^2+1)/t^3");
  EXPECT_EQ(valuation(x, kInf), 1);
  EXPECT_EQ(valuation(x, fin(*F, "t")), -3);
  EXPECT_EQ(valuation(x, fin(*F, "t^2+1")), 1);
  EXPECT_FALSE(valuation(RatFunc(*F), kInf).has_value());
}

TEST(Valuation, ProductFormulaExhaustive) {
  auto F = make_field(3);
  std::vector<Poly> dens;
  for_each_poly(*F, 1, [&](const Poly& h) {
    if (h.is_monic()) dens.push_back(h);
  });
  std::size_t checked = 0;
  for_each_poly(*F, 6, [&](const Poly& g) {
    if (g.is_zero()) return;
    for (const Poly& h : dens) {
      RatFunc x(g, h);
      std::int64_t sum = *valuation(x, kInf);
      for (const Place& v : support(x)) sum += *valuation(x, v) * static_cast<std::int64_t>(v.degree());
      ASSERT_EQ(sum, 0) << format(x);
      ++checked;
    }
  });
  EXPECT_GT(checked, 5000u);
}

TEST(Residue, Examples) {
  auto F = make_field(3);
  EXPECT_EQ(residue(R(*F, "t+1"), fin(*F, "t")), P(*F, "1"));
  EXPECT_EQ(residue(R(*F, "2*t^2+2"), fin(*F, "t")), P(*F, "2"));
  EXPECT_EQ(residue(R(*F, "(t+1)/t"), kInf), P(*F, "1"));
  EXPECT_EQ(residue(R(*F, "1/t"), kInf), P(*F, "0"));
  EXPECT_EQ(residue(R(*F, "1/(t+1)"), fin(*F, "t^2+1")), P(*F, "t+2"));
  EXPECT_THROW(residue(R(*F, "1/t"), fin(*F, "t")), DomainError);
  EXPECT_THROW(residue(R(*F, "t"), kInf), DomainError);
}

TEST(SquareClass, Examples) {
  auto F = make_field(3);
  EXPECT_EQ(square_class_at_infinity(R(*F, "t^2+1")), SquareClass::kSquare);
  EXPECT_EQ(square_class_at_infinity(R(*F, "2*t^2+2")), SquareClass::kFConst);
  EXPECT_EQ(square_class_at_infinity(R(*F, "t")), SquareClass::kTInv);
  EXPECT_EQ(square_class_at_infinity(R(*F, "2/t")), SquareClass::kFTInv);
  EXPECT_THROW(square_class_at_infinity(RatFunc(*F)), DomainError);
}

TEST(SquareClass, KleinFourGroup) {
  using S = SquareClass;
  std::vector<S> all{S::kSquare, S::kTInv, S::kFConst, S::kFTInv};
  for (S a : all) {
    EXPECT_EQ(a * a, S::kSquare);
    EXPECT_EQ(a * S::kSquare, a);
    for (S b : all) EXPECT_EQ(a * b, b * a);
  }
  EXPECT_EQ(S::kTInv * S::kFConst, S::kFTInv);
}

TEST(SquareClass, MultiplicativeAndSquareInvariant) {
  for (auto F : {make_field(3), make_field(5), make_field(3, 2)}) {
    Gen gen(*F);
    for (int i = 0; i < 300; ++i) {
      RatFunc x = gen.fraction(4), y = gen.fraction(4);
      EXPECT_EQ(square_class_at_infinity(x * y * y), square_class_at_infinity(x));
      EXPECT_EQ(square_class_at_infinity(x * y),
                square_class_at_infinity(x) * square_class_at_infinity(y));
    }
  }
}

TEST(SquareClass, AgreesWithHenselAndNaiveLifting) {
  for (auto F : {make_field(3), make_field(5)}) {
    for (const RatFunc& x : fqt::testing::nonzero_fractions(*F, 2)) {
      bool square = square_class_at_infinity(x) == SquareClass::kSquare;
      ASSERT_EQ(hensel_square_at_infinity(x), square) << format(x);
      ASSERT_EQ(fqt::testing::square_at_infinity_by_search(x), square) << format(x);
    }
  }
}

TEST(Laurent, SquareRootSquaresBack) {
  auto F = make_field(5);
  Gen gen(*F);
  for (int i = 0; i < 200; ++i) {
    RatFunc x = gen.fraction(4);
    RatFunc y = x * x;
    LaurentSeries s = expand_at_infinity(y, 10);
    auto r = series_sqrt(*F, s);
    ASSERT_TRUE(r.has_value());
    LaurentSeries back = series_square(*F, *r);
    EXPECT_EQ(back.valuation, s.valuation);
    EXPECT_EQ(back.coeffs, s.coeffs);
  }
  LaurentSeries e = expand_at_infinity(R(*F, "1/(t-1)"), 4);
  EXPECT_EQ(e.valuation, 1);
  EXPECT_EQ(e.coeffs, (std::vector<Fq>{Fq{1}, Fq{1}, Fq{1}, Fq{1}}));
}

TEST(SquareAtPlace, Examples) {
  auto F = make_field(3);
  EXPECT_TRUE(is_square_at_place(R(*F, "t^2"), fin(*F, "t")));
  EXPECT_FALSE(is_square_at_place(R(*F, "2"), fin(*F, "t")));
  EXPECT_TRUE(is_square_at_place(R(*F, "t"), fin(*F, "t^2+1")));
  EXPECT_TRUE(is_square_at_place(R(*F, "2"), fin(*F, "t^2+1")));
  EXPECT_FALSE(is_square_at_place(R(*F, "t"), fin(*F, "t")));
}

TEST(SquareAtPlace, ResidueSquaresMatchEnumeration) {
  for (auto F : {make_field(3), make_field(5)}) {
    for (std::size_t d = 1; d <= 3; ++d) {
      for (const Poly& f : monic_irreducibles(*F, d)) {
        Place v = Place::trusted(f);
        for_each_poly(*F, d - 1, [&](const Poly& r) {
          ASSERT_EQ(residue_is_square(r, v), fqt::testing::residue_square_by_enumeration(r, f))
              << format(r) << " mod " << format(f);
        });
      }
    }
  }
}

TEST(Legendre, Examples) {
  auto F = make_field(3);
  EXPECT_EQ(legendre(P(*F, "2"), P(*F, "t")), SymbolValue::minus());
  EXPECT_EQ(legendre(P(*F, "2"), P(*F, "t^2+1")), SymbolValue::plus());
  EXPECT_EQ(legendre(P(*F, "t"), P(*F, "t^2+1")), SymbolValue::plus());
  try {
    legendre(P(*F, "t^2+t"), P(*F, "t"));
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("symbol undefined"), std::string::npos);
  }
  EXPECT_THROW(legendre(P(*F, "0"), P(*F, "t")), DomainError);
  EXPECT_THROW(legendre(P(*F, "1"), P(*F, "t^2+2")), DomainError);
}

TEST(Legendre, Multiplicative) {
  auto F = make_field(3);
  std::vector<Poly> gs = fqt::testing::nonzero_polys(*F, 3);
  for (std::size_t d = 1; d <= 3; ++d) {
    for (const Poly& f : monic_irreducibles(*F, d)) {
      for (const Poly& g : gs) {
        if ((g % f).is_zero()) continue;
        SymbolValue lg = legendre(g, f);
        for (const Poly& h : gs) {
          if ((h % f).is_zero()) continue;
          ASSERT_EQ(legendre(g * h, f), lg * legendre(h, f));
        }
      }
    }
  }
}

TEST(Legendre, NonsquareConstantsByDegreeParity) {
  for (auto F : {make_field(3), make_field(5)}) {
    for (std::size_t d = 1; d <= 4; ++d) {
      for (const Poly& f : monic_irreducibles(*F, d)) {
        for (std::uint32_t c = 1; c < F->q(); ++c) {
          if (F->is_square(Fq{c})) continue;
          EXPECT_EQ(legendre(Poly::constant(*F, Fq{c}), f).is_plus(), d % 2 == 0);
        }
      }
    }
  }
}

TEST(Hilbert, Examples) {
  auto F = make_field(3);
  EXPECT_EQ(hilbert_symbol(R(*F, "2"), R(*F, "1/t"), kInf), SymbolValue::minus());
  TameSymbol s = tame_symbol(R(*F, "2*t"), R(*F, "2*t^2+2"), fin(*F, "t"));
  EXPECT_EQ(s.m, 1);
  EXPECT_EQ(s.n, 0);
  EXPECT_EQ(s.unit_residue, P(*F, "2"));
  EXPECT_EQ(s.value, SymbolValue::minus());
  EXPECT_EQ(hilbert_symbol(R(*F, "t"), R(*F, "t"), fin(*F, "t^2+1")), SymbolValue::plus());
  try {
    tame_symbol(R(*F, "0"), R(*F, "1"), fin(*F, "t"));
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_STREQ(e.what(), "symbol undefined for zero");
  }
}

TEST(Hilbert, SymmetricBimultiplicativeAndTrivialOnNorms) {
  for (auto F : {make_field(3), make_field(5)}) {
    Gen gen(*F);
    for (int i = 0; i < 200; ++i) {
      RatFunc a = gen.fraction(3), b1 = gen.fraction(3), b2 = gen.fraction(3);
      std::vector<Place> places = support(a * b1 * b2);
      places.push_back(kInf);
      for (const Place& v : places) {
        SymbolValue s1 = hilbert_symbol(a, b1, v);
        EXPECT_EQ(s1, hilbert_symbol(b1, a, v));
        EXPECT_EQ(hilbert_symbol(a, b1 * b2, v), s1 * hilbert_symbol(a, b2, v));
        EXPECT_EQ(hilbert_symbol(a, -a, v), SymbolValue::plus());
        EXPECT_EQ(hilbert_symbol(a, a * a, v), SymbolValue::plus());
      }
    }
  }
}

TEST(Hilbert, DependsOnlyOnSquareClasses) {
  auto F = make_field(5);
  Gen gen(*F);
  for (int i = 0; i < 200; ++i) {
    RatFunc a = gen.fraction(3), b = gen.fraction(3), s = gen.fraction(2);
    for (const Place& v : support(a * b * s)) {
      EXPECT_EQ(hilbert_symbol(a * s * s, b, v), hilbert_symbol(a, b, v));
    }
    EXPECT_EQ(hilbert_symbol(a * s * s, b, kInf), hilbert_symbol(a, b, kInf));
  }
}

TEST(Hilbert, AgreesWithConicOracleSampled) {
  for (auto F : {make_field(3), make_field(5)}) {
    Gen gen(*F);
    for (int i = 0; i < 60; ++i) {
      RatFunc a = gen.fraction(2), b = gen.fraction(2);
      std::vector<Place> places = support(a * b);
      places.push_back(kInf);
      for (const Place& v : places) {
        ASSERT_EQ(hilbert_symbol(a, b, v).value(), fqt::testing::conic_symbol(a, b, v))
            << "(" << format(a) << ", " << format(b) << ")_" << format(v);
      }
    }
  }
}

TEST(Hilbert, WorksOverExtensionFields) {
  auto F = make_field(3, 2);
  Gen gen(*F);
  for (int i = 0; i < 40; ++i) {
    RatFunc a = gen.fraction(2), b = gen.fraction(2);
    std::vector<Place> places = support(a * b);
    places.push_back(kInf);
    for (const Place& v : places) {
      if (v.degree() > 1) continue;
      ASSERT_EQ(hilbert_symbol(a, b, v).value(), fqt::testing::conic_symbol(a, b, v, 4));
    }
  }
}
