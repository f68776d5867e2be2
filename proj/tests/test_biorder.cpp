#include "gentor/biorder.hpp"

#include "support/oracles.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <catch_amalgamated.hpp>

#include <random>

using namespace gentor;

namespace {

using Float50 = boost::multiprecision::cpp_bin_float_50;

Float50 to_float(const Rational& r) {
  return Float50(numerator(r)) / Float50(denominator(r));
}

Float50 to_float(const QuadExt& x) {
  return to_float(x.rational_part()) +
         to_float(x.radical_coeff()) * sqrt(Float50(x.discriminant()));
}

Word wp(const std::string& text) {
  return parse_word(abt_lower_alphabet(), text);
}

Rational random_rational(std::mt19937_64& rng, int span = 40) {
  std::uniform_int_distribution<long long> num(-span, span);
  std::uniform_int_distribution<long long> den(1, span);
  return Rational(num(rng), den(rng));
}

}  // namespace

TEST_CASE("quadratic numbers fold perfect squares", "[biorder][quadext]") {
  QuadExt x(Rational(1, 2), Rational(3), 9);  // 1/2 + 3*sqrt(9) = 19/2
  CHECK(x.radical_coeff() == 0);
  CHECK(x.rational_part() == Rational(19, 2));

  QuadExt y(Rational(0), Rational(1), 5);
  CHECK(y.radical_coeff() == 1);
  CHECK((y * y).rational_part() == 5);
}

TEST_CASE("quadratic sign analysis is exact", "[biorder][quadext]") {
  // 7/5 - 3/5 sqrt(5) < 0 because 49 < 45... no: 49/25 vs 9/25*5 = 45/25.
  QuadExt x(Rational(7, 5), Rational(-3, 5), 5);
  CHECK(x.sign() == 1);
  QuadExt y(Rational(2), Rational(-1), 5);  // 4 < 5
  CHECK(y.sign() == -1);
  CHECK(QuadExt(Rational(0), Rational(0), 5).sign() == 0);
  CHECK((x - x).sign() == 0);
  CHECK_THROWS_AS(x + y * QuadExt(Rational(0), Rational(1), 7),
                  std::invalid_argument);
}

TEST_CASE("exact sign agrees with 50-digit floating evaluation",
          "[biorder][quadext][property]") {
  std::mt19937_64 rng(77);
  std::vector<Int> discs{5, 9, 13, 17, 25, 41};
  int checked = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    QuadExt x(random_rational(rng), random_rational(rng),
              discs[trial % discs.size()]);
    Float50 f = to_float(x);
    if (x.sign() == 0) {
      CHECK(abs(f) < Float50("1e-40"));
    } else {
      CHECK((f > 0 ? 1 : -1) == x.sign());
    }
    ++checked;
  }
  CHECK(checked == 10000);
}

TEST_CASE("field arithmetic with division", "[biorder][quadext]") {
  std::mt19937_64 rng(78);
  for (int trial = 0; trial < 200; ++trial) {
    QuadExt x(random_rational(rng), random_rational(rng), 13);
    QuadExt y(random_rational(rng), random_rational(rng), 13);
    if (y.is_zero()) continue;
    CHECK((x / y) * y == x);
  }
}

TEST_CASE("eigenbasis is exact", "[biorder]") {
  // pq = 2 has square discriminant 9: everything collapses to rationals.
  Eigenbasis e12 = eigenbasis(1, 2);
  CHECK(e12.lambda_plus == QuadExt::of(Rational(2), 9));
  CHECK(e12.lambda_minus == QuadExt::of(Rational(1, 2), 9));

  for (long long p = 1; p <= 6; ++p)
    for (long long q = 1; q <= 6; ++q) {
      KContext ctx = make_k_context(p, q);
      Eigenbasis e = eigenbasis(p, q);
      CHECK(ctx.action.det() == 1);
      CHECK(e.lambda_plus * e.lambda_minus ==
            QuadExt::of(Rational(1), ctx.discriminant));

      // A V = lambda V, component-wise, exactly.
      auto check_pair = [&](const std::pair<QuadExt, QuadExt>& v,
                            const QuadExt& lambda) {
        QuadExt ax = QuadExt::of(ctx.action.at(0, 0), ctx.discriminant) * v.first +
                     QuadExt::of(ctx.action.at(0, 1), ctx.discriminant) * v.second;
        QuadExt ay = QuadExt::of(ctx.action.at(1, 0), ctx.discriminant) * v.first +
                     QuadExt::of(ctx.action.at(1, 1), ctx.discriminant) * v.second;
        CHECK(ax == lambda * v.first);
        CHECK(ay == lambda * v.second);
      };
      check_pair(e.v_plus, e.lambda_plus);
      check_pair(e.v_minus, e.lambda_minus);

      // V_+ - V_- = (0, 1).
      CHECK((e.v_plus.first - e.v_minus.first).is_zero());
      CHECK(e.v_plus.second - e.v_minus.second ==
            QuadExt::of(Rational(1), ctx.discriminant));
    }
}

TEST_CASE("k group basics", "[biorder]") {
  KContext ctx = make_k_context(1, 1);
  KElement id = KElement::identity(ctx);
  KElement b = phi(ctx, wp("b"));
  KElement t = phi(ctx, wp("t"));

  CHECK(k_multiply(id, b) == b);
  CHECK(k_multiply(b, id) == b);
  CHECK(t.level() == 1);
  CHECK(t.raw_s().is_zero());
  CHECK(b.level() == 0);
  CHECK(b.raw_s().is_zero());
  CHECK(b.raw_l() == QuadExt::of(Rational(1), ctx.discriminant));
  CHECK(b.coeff_plus() == QuadExt::of(Rational(1), ctx.discriminant));
  CHECK(b.coeff_minus() == QuadExt::of(Rational(-1), ctx.discriminant));

  // ((0,0),1) * ((0,1),0): the vector picks up the second column of the
  // action matrix, (-1/q, 1 + 1/(pq)).
  KElement prod = k_multiply(t, b);
  CHECK(prod.level() == 1);
  CHECK(prod.raw_s() == QuadExt::of(ctx.action.at(0, 1), ctx.discriminant));
  CHECK(prod.raw_l() == QuadExt::of(ctx.action.at(1, 1), ctx.discriminant));

  CHECK_THROWS_AS(k_multiply(b, KElement::identity(make_k_context(2, 1))),
                  std::invalid_argument);
}

TEST_CASE("rho counts t after expanding a", "[biorder]") {
  CHECK(rho(wp("t^3 b^-1")) == 3);
  CHECK(rho(wp("a")) == 0);
  CHECK(rho(wp("a^5 b^-2 t^-4")) == -4);
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    Word u = testing::random_word(abt_lower_alphabet(), rng);
    Word v = testing::random_word(abt_lower_alphabet(), rng);
    CHECK(rho(concat(u, v)) == rho(u) + rho(v));
  }
}

TEST_CASE("xword rewriting", "[biorder]") {
  Alphabet bt({"b", "t"});
  XWord w1 = to_xword(parse_word(bt, "b"));
  REQUIRE(w1.runs.size() == 1);
  CHECK(w1.runs[0] == std::pair<Int, Int>{0, 1});
  CHECK(w1.level == 0);

  XWord w2 = to_xword(parse_word(bt, "t^-1 b t"));
  REQUIRE(w2.runs.size() == 1);
  CHECK(w2.runs[0] == std::pair<Int, Int>{-1, 1});
  CHECK(w2.level == 0);

  XWord w3 = to_xword(parse_word(bt, "t b^2 t^-3"));
  REQUIRE(w3.runs.size() == 1);
  CHECK(w3.runs[0] == std::pair<Int, Int>{1, 2});
  CHECK(w3.level == -2);
}

TEST_CASE("r_map kills the characteristic relator", "[biorder]") {
  for (long long p = 1; p <= 4; ++p)
    for (long long q = 1; q <= 4; ++q) {
      KContext ctx = make_k_context(p, q);
      Int pq = Int(p) * q;
      for (int shift = -2; shift <= 2; ++shift) {
        XWord xw{{{shift + 1, pq}, {shift, -(2 * pq + 1)}, {shift - 1, pq}}, 0};
        auto [s, l] = r_map(ctx, xw);
        CHECK(s.is_zero());
        CHECK(l.is_zero());
      }
    }
  KContext ctx = make_k_context(1, 1);
  CHECK(r_map(ctx, to_xword(parse_word(Alphabet({"b", "t"}), "b"))).second ==
        QuadExt::of(Rational(1), ctx.discriminant));
  CHECK_THROWS_AS(r_map(ctx, XWord{{}, 1}), std::invalid_argument);
}

TEST_CASE("phi basics", "[biorder]") {
  KContext ctx = make_k_context(2, 3);
  KElement t = phi(ctx, wp("t"));
  CHECK(t.level() == 1);
  CHECK(t.raw_s().is_zero());
  CHECK(t.raw_l().is_zero());
  CHECK(phi(ctx, wp("[b, t^-1 b t]")) == KElement::identity(ctx));
  CHECK(phi(ctx, wp("a b a^-1 b^-1")) == KElement::identity(ctx));
  // a lands in the kernel with the first basis vector shifted: a = x_-1 x_0^-1.
  KElement a = phi(ctx, wp("a"));
  CHECK(a.level() == 0);
}

TEST_CASE("phi is a homomorphism on random words", "[biorder][property]") {
  std::mt19937_64 rng(808);
  for (auto [p, q] : {std::pair{1LL, 1LL}, {2LL, 3LL}, {3LL, 1LL}}) {
    KContext ctx = make_k_context(p, q);
    for (int trial = 0; trial < 400; ++trial) {
      Word u = testing::random_word(abt_lower_alphabet(), rng, 4, 3);
      Word v = testing::random_word(abt_lower_alphabet(), rng, 4, 3);
      CHECK(phi(ctx, concat(u, v)) == k_multiply(phi(ctx, u), phi(ctx, v)));
    }
  }
}

TEST_CASE("window relators map to the K identity", "[biorder]") {
  for (long long p = 1; p <= 3; ++p)
    for (long long q = 1; q <= 3; ++q) {
      KContext ctx = make_k_context(p, q);
      for (int window = 1; window <= 3; ++window) {
        Presentation pres = h_presentation_window(make_params(p, q), window);
        // tau -> t, x_i -> t^i b t^-i.
        Alphabet lower = abt_lower_alphabet();
        GeneratorMap into_abt{pres.alphabet, lower, {}};
        into_abt.images.emplace(*pres.alphabet.find("tau"),
                                parse_word(lower, "t"));
        for (int i = -window; i <= window; ++i) {
          Word image = conjugate(parse_word(lower, "b"),
                                 power(parse_word(lower, "t"), -i));
          into_abt.images.emplace(
              *pres.alphabet.find("x_" + std::to_string(i)), image);
        }
        for (const auto& r : pres.relators)
          CHECK(phi(ctx, substitute(r, into_abt)) == KElement::identity(ctx));
      }
    }
}

TEST_CASE("comparison basics", "[biorder]") {
  KContext ctx = make_k_context(1, 1);
  CHECK(k_compare(phi(ctx, wp("t")), phi(ctx, wp("b"))) ==
        std::strong_ordering::greater);
  CHECK(k_compare(phi(ctx, wp("b")), KElement::identity(ctx)) ==
        std::strong_ordering::greater);
  CHECK(k_compare(phi(ctx, wp("b")), phi(ctx, wp("b"))) ==
        std::strong_ordering::equal);
  CHECK(word_sign(ctx, Word(abt_lower_alphabet())) ==
        std::strong_ordering::equal);
  CHECK(word_sign(ctx, wp("t")) == std::strong_ordering::greater);
  CHECK(word_sign(ctx, wp("t^-1")) == std::strong_ordering::less);
  CHECK(word_sign(ctx, wp("b^-1")) == std::strong_ordering::less);
}

TEST_CASE("bi-invariance and order axioms on sampled elements",
          "[biorder][property]") {
  std::mt19937_64 rng(909);
  KContext ctx = make_k_context(2, 1);
  auto random_element = [&] {
    return phi(ctx, testing::random_word(abt_lower_alphabet(), rng, 4, 3));
  };
  for (int trial = 0; trial < 800; ++trial) {
    KElement u = random_element(), v = random_element(), w = random_element();
    auto uv = k_compare(u, v);
    // Trichotomy + antisymmetry.
    CHECK(k_compare(v, u) == (uv == std::strong_ordering::less
                                  ? std::strong_ordering::greater
                                  : uv == std::strong_ordering::greater
                                        ? std::strong_ordering::less
                                        : std::strong_ordering::equal));
    // Bi-invariance.
    CHECK(k_compare(k_multiply(w, u), k_multiply(w, v)) == uv);
    CHECK(k_compare(k_multiply(u, w), k_multiply(v, w)) == uv);
    // Transitivity.
    if (uv == std::strong_ordering::less &&
        k_compare(v, w) == std::strong_ordering::less)
      CHECK(k_compare(u, w) == std::strong_ordering::less);
  }
}

TEST_CASE("change of basis round-trips", "[biorder][property]") {
  std::mt19937_64 rng(910);
  for (auto [p, q] : {std::pair{1LL, 1LL}, {2LL, 3LL}, {1LL, 2LL}}) {
    KContext ctx = make_k_context(p, q);
    Eigenbasis e = eigenbasis(p, q);
    for (int trial = 0; trial < 100; ++trial) {
      QuadExt s(random_rational(rng), random_rational(rng), ctx.discriminant);
      QuadExt l(random_rational(rng), random_rational(rng), ctx.discriminant);
      KElement el = KElement::from_raw(ctx, s, l, 0);
      // Reconstruct (s, l) from the eigen coefficients.
      QuadExt rs = el.coeff_plus() * e.v_plus.first +
                   el.coeff_minus() * e.v_minus.first;
      QuadExt rl = el.coeff_plus() * e.v_plus.second +
                   el.coeff_minus() * e.v_minus.second;
      CHECK(rs == s);
      CHECK(rl == l);
    }
  }
}

TEST_CASE("positive rescaling of the eigenvectors keeps all verdicts",
          "[biorder][property]") {
  // Scaling V_+ and V_- by positive rationals scales the coefficients by the
  // positive inverses; comparisons are unchanged.
  std::mt19937_64 rng(911);
  KContext ctx = make_k_context(1, 1);
  for (int trial = 0; trial < 200; ++trial) {
    Word wu = testing::random_word(abt_lower_alphabet(), rng, 3, 2);
    Word wv = testing::random_word(abt_lower_alphabet(), rng, 3, 2);
    KElement u = phi(ctx, wu), v = phi(ctx, wv);
    Rational su(1 + static_cast<long long>(rng() % 20),
                1 + static_cast<long long>(rng() % 20));
    Rational sv(1 + static_cast<long long>(rng() % 20),
                1 + static_cast<long long>(rng() % 20));
    auto scaled_cmp = [&](const KElement& e1, const KElement& e2) {
      if (e1.level() != e2.level())
        return e1.level() < e2.level() ? std::strong_ordering::less
                                       : std::strong_ordering::greater;
      // Rescaled coefficients: coeff/su, coeff/sv.
      QuadExt a1 = Rational(denominator(su), numerator(su)) * e1.coeff_plus();
      QuadExt a2 = Rational(denominator(su), numerator(su)) * e2.coeff_plus();
      auto c = a1 <=> a2;
      if (c != std::strong_ordering::equal) return c;
      QuadExt b1 = Rational(denominator(sv), numerator(sv)) * e1.coeff_minus();
      QuadExt b2 = Rational(denominator(sv), numerator(sv)) * e2.coeff_minus();
      return b1 <=> b2;
    };
    CHECK(scaled_cmp(u, v) == k_compare(u, v));
  }
}
