#include "gentor/presentations.hpp"

#include "gentor/permrep.hpp"
#include "support/oracles.hpp"

#include <catch_amalgamated.hpp>

using namespace gentor;

TEST_CASE("lin presentation", "[presentations]") {
  Presentation pres = knot_group_lin(make_params(1, 1));
  REQUIRE(pres.relators.size() == 2);
  CHECK(pres.relators[0] == parse_word(pres.alphabet, "t a t^-1 a^-1 b"));
  CHECK(pres.relators[1] == parse_word(pres.alphabet, "t b^-1 a^-1 t^-1 b"));

  for (auto [p, q] : {std::pair{2, 3}, {5, -4}, {-3, 7}}) {
    Presentation g = knot_group_lin(make_params(p, q));
    REQUIRE(g.relators.size() == 2);
    int t = *g.alphabet.find("t");
    for (const auto& r : g.relators) CHECK(exponent_sum(r, t) == 0);
  }
  CHECK_THROWS_AS(knot_group_lin(DoubleTwistParams{0, 1}), std::invalid_argument);
}

TEST_CASE("surgery presentation on {a,b,t}", "[presentations]") {
  Presentation pres = surgery_group_std(make_params(1, 1));
  REQUIRE(pres.relators.size() == 3);
  CHECK(pres.relators[2] == parse_word(pres.alphabet, "b^-1 a^-1 b a"));

  // Abelianization has rank 1 with a and b trivial: the exponent-sum matrix
  // has Smith diagonal (1, 1).
  for (auto [p, q] : {std::pair{1, 1}, {3, 2}, {4, -5}}) {
    Presentation g = surgery_group_std(make_params(p, q));
    auto diag = testing::smith_diagonal(testing::relator_matrix(g));
    CHECK(diag == std::vector<long long>{1, 1});
  }
}

TEST_CASE("two-generator knot presentation", "[presentations]") {
  Presentation pres = knot_group_two_gen(make_params(1, 1));
  REQUIRE(pres.relators.size() == 1);
  CHECK(to_text(pres.relators[0]) == "x y x y^-1 x^-1 y x y x^-1 y^-1");

  // The relator abelianizes to x + y (the meridian relation), so both
  // exponent sums are 1; the balanced word is the longitude relator below.
  for (auto [p, q] : {std::pair{1, 1}, {2, 3}, {3, -2}}) {
    Presentation g = knot_group_two_gen(make_params(p, q));
    int x = *g.alphabet.find("x"), y = *g.alphabet.find("y");
    CHECK(exponent_sum(g.relators[0], x) == 1);
    CHECK(exponent_sum(g.relators[0], y) == 1);
  }
}

TEST_CASE("two-generator surgery presentation", "[presentations]") {
  Presentation pres = surgery_group_two_gen(make_params(1, 1));
  REQUIRE(pres.relators.size() == 2);
  Word expected = concat(loop_word_inverse_twist(make_params(1, 1)),
                         loop_word(make_params(1, 1)));
  CHECK(pres.relators[1] == expected);
  CHECK(to_text(pres.relators[1]) == "x^-1 y^-1 x y x y x^-1 y^-1");
  CHECK(meridian_two_gen() == parse_word(pres.alphabet, "y^-1"));

  for (auto [p, q] : {std::pair{2, 3}, {3, -2}}) {
    Presentation g = surgery_group_two_gen(make_params(p, q));
    int x = *g.alphabet.find("x"), y = *g.alphabet.find("y");
    CHECK(exponent_sum(g.relators[1], x) == 0);
    CHECK(exponent_sum(g.relators[1], y) == 0);
  }
}

TEST_CASE("ABT presentation is the std presentation with p,q swapped",
          "[presentations]") {
  for (auto [p, q] : {std::pair{1, 1}, {2, 3}, {4, -3}}) {
    Presentation abt = surgery_group_ABT(make_params(p, q));
    REQUIRE(abt.relators.size() == 3);
    Presentation swapped = surgery_group_std(make_params(q, p));
    Alphabet lower = abt_lower_alphabet();
    GeneratorMap rename{abt.alphabet, lower, {
        {*abt.alphabet.find("A"), parse_word(lower, "a")},
        {*abt.alphabet.find("B"), parse_word(lower, "b")},
        {*abt.alphabet.find("T"), parse_word(lower, "t")},
    }};
    for (std::size_t i = 0; i < 3; ++i)
      CHECK(substitute(abt.relators[i], rename) == swapped.relators[i]);
  }
}

TEST_CASE("complement presentation", "[presentations]") {
  Presentation pres = complement_group(make_params(1, 1));
  REQUIRE(pres.relators.size() == 1);
  CHECK(pres.relators[0] == parse_word(pres.alphabet, "b^-1 a^-1 b a"));

  Presentation g = complement_group(make_params(3, 4));
  Word b = parse_word(g.alphabet, "b"), a = parse_word(g.alphabet, "a");
  CHECK(g.relators[0] == commutator(power(b, 4), power(a, 3)));
}

TEST_CASE("finite window of the shift presentation", "[presentations]") {
  Presentation pres = h_presentation_window(make_params(2, 3), 1);
  CHECK(pres.alphabet.size() == 4);  // tau, x_-1, x_0, x_1
  // 3 commutators + 1 characteristic + 2 shifts.
  REQUIRE(pres.relators.size() == 6);

  Word characteristic = pres.relators[3];
  CHECK(characteristic == parse_word(pres.alphabet, "x_1^6 x_0^-13 x_-1^6"));

  int tau = *pres.alphabet.find("tau");
  for (const auto& r : pres.relators) {
    CHECK_FALSE(r.is_identity());
    CHECK(exponent_sum(r, tau) == 0);
  }
  CHECK_THROWS_AS(h_presentation_window(make_params(1, 1), 0),
                  std::invalid_argument);

  // Window counts follow the index rule.
  Presentation n3 = h_presentation_window(make_params(1, 1), 3);
  std::size_t commutators = 7 * 6 / 2, characteristic_count = 5, shifts = 6;
  CHECK(n3.relators.size() == commutators + characteristic_count + shifts);
}

TEST_CASE("relators stay freely reduced and non-empty on a parameter grid",
          "[presentations][property]") {
  for (long long p = 1; p <= 10; ++p)
    for (long long q = 1; q <= 10; ++q)
      for (auto params : {make_params(p, q), make_params(-p, q),
                          make_params(p, -q), make_params(-p, -q)}) {
        for (const auto& pres :
             {knot_group_lin(params), surgery_group_std(params),
              knot_group_two_gen(params), surgery_group_two_gen(params),
              surgery_group_ABT(params), complement_group(params)}) {
          for (const auto& r : pres.relators) {
            CHECK_FALSE(r.is_identity());
            for (std::size_t i = 0; i + 1 < r.syllables().size(); ++i)
              CHECK(r.syllables()[i].gen != r.syllables()[i + 1].gen);
          }
        }
      }
}

TEST_CASE("generator change std -> two_gen", "[presentations]") {
  auto params = make_params(2, 3);
  GeneratorMap f = generator_change(basis::kStd, basis::kTwoGen, params);
  Alphabet lower = abt_lower_alphabet();
  Alphabet xy = xy_alphabet();
  CHECK(f.images.at(*lower.find("b")) == parse_word(xy, "x y"));
  CHECK(f.images.at(*lower.find("t")) == parse_word(xy, "y^-1"));
  Word b_img = f.images.at(*lower.find("b"));
  Word expected_a = concat(conjugate(power(b_img, 3), parse_word(xy, "y^-1")),
                           power(b_img, -3));
  CHECK(f.images.at(*lower.find("a")) == expected_a);

  // The longitude maps to a word freely equal to L'^p L^p.
  Word longitude = commutator(power(parse_word(lower, "b"), 3),
                              power(parse_word(lower, "a"), 2));
  Word image = substitute(longitude, f);
  Word target = concat(power(loop_word_inverse_twist(params), 2),
                       power(loop_word(params), 2));
  CHECK(image == target);

  // The shifted-commutator candidate maps to [xy, yx].
  Word cand_std = candidate("[b,t^{-n}bt^n]", 1, basis::kStd).word;
  CHECK(substitute(cand_std, f) == candidate("[xy,yx]", 0, basis::kTwoGen).word);

  CHECK_THROWS_AS(generator_change(basis::kTwoGen, basis::kAbt, params),
                  std::invalid_argument);
}

TEST_CASE("generator changes kill relators in permutation models",
          "[presentations][models]") {
  // two_gen models come straight from witness rows; push std and abt
  // relators through the changes and check they die.
  struct Row {
    long long p, q;
    std::vector<int> x, y;
  };
  std::vector<Row> rows{
      {2, 2, {1, 2, 3, 4, 5, 0}, {1, 3, 0, 4, 5, 2}},
      {3, 1, {1, 2, 3, 4, 5, 6, 0}, {3, 0, 5, 2, 6, 4, 1}},
      {5, 2, {1, 2, 3, 4, 5, 6, 0}, {1, 3, 4, 5, 0, 6, 2}},
  };
  for (const auto& row : rows) {
    auto params = make_params(row.p, row.q);
    PermAssignment model = make_assignment(
        xy_alphabet(), {Permutation(row.x), Permutation(row.y)});
    REQUIRE(is_homomorphism(surgery_group_two_gen(params), model));

    GeneratorMap f = generator_change(basis::kStd, basis::kTwoGen, params);
    for (const auto& r : surgery_group_std(params).relators)
      CHECK(evaluate(substitute(r, f), model).is_identity());

    // The candidates correspond under the induced model.
    Word cand_std = candidate("[b,t^{-n}bt^n]", 1, basis::kStd).word;
    Word cand_two_gen = candidate("[xy,yx]", 0, basis::kTwoGen).word;
    CHECK(evaluate(substitute(cand_std, f), model) ==
          evaluate(cand_two_gen, model));

    // Chain abt -> std -> two_gen: abt relators die as well.
    GeneratorMap abt_to_std = generator_change(basis::kAbt, basis::kStd, params);
    for (const auto& r : surgery_group_ABT(params).relators) {
      Word in_two_gen = substitute(substitute(r, abt_to_std), f);
      CHECK(evaluate(in_two_gen, model).is_identity());
    }
  }
}

TEST_CASE("generator change two_gen -> std on tiny models",
          "[presentations][models]") {
  auto params = make_params(1, 1);
  Presentation std_pres = surgery_group_std(params);
  auto models = testing::enumerate_models(std_pres, 3, 4, true);
  REQUIRE_FALSE(models.empty());
  GeneratorMap two_gen_to_std =
      generator_change(basis::kTwoGen, basis::kStd, params);
  for (const auto& model : models)
    for (const auto& r : surgery_group_two_gen(params).relators)
      CHECK(evaluate(substitute(r, two_gen_to_std), model).is_identity());
}

TEST_CASE("candidate construction", "[presentations]") {
  CHECK(candidate("[xy,yx]", 0, basis::kTwoGen).word ==
        commutator(parse_word(xy_alphabet(), "x y"),
                   parse_word(xy_alphabet(), "y x")));
  Alphabet lower = abt_lower_alphabet();
  CHECK(candidate("[b,t^{-n}bt^n]", 1, basis::kStd).word ==
        commutator(parse_word(lower, "b"),
                   conjugate(parse_word(lower, "b"), parse_word(lower, "t"))));
  CHECK(candidate("[b^{-1},a]", 0, basis::kStd).word ==
        parse_word(lower, "b a^-1 b^-1 a"));
  CHECK(candidate("a", 0, basis::kStd).word == parse_word(lower, "a"));
  CHECK(candidate("[B,T^{-n}BT^n]", 2, basis::kAbt).word ==
        commutator(parse_word(abt_upper_alphabet(), "B"),
                   conjugate(parse_word(abt_upper_alphabet(), "B"),
                             parse_word(abt_upper_alphabet(), "T^2"))));
  CHECK_THROWS_AS(candidate("[xy,yx]", 0, basis::kStd), std::invalid_argument);
  CHECK_THROWS_AS(candidate("nope", 0, basis::kStd), std::invalid_argument);
}
