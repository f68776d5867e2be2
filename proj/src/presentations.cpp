#include "gentor/presentations.hpp"

#include <stdexcept>

namespace gentor {

namespace {

Word gen_word(const Alphabet& a, const char* name, Int exp = 1) {
  auto id = a.find(name);
  if (!id) throw std::logic_error(std::string("missing generator ") + name);
  return Word::from_syllables(a, {Syllable{*id, exp}});
}

}  // namespace

DoubleTwistParams make_params(long long p, long long q) {
  if (p == 0 || q == 0)
    throw std::invalid_argument("double twist parameters must be non-zero");
  return DoubleTwistParams{p, q};
}

Alphabet abt_lower_alphabet() { return Alphabet({"a", "b", "t"}); }
Alphabet xy_alphabet() { return Alphabet({"x", "y"}); }
Alphabet abt_upper_alphabet() { return Alphabet({"A", "B", "T"}); }

Presentation knot_group_lin(const DoubleTwistParams& params) {
  make_params(params.p, params.q);
  Alphabet al = abt_lower_alphabet();
  Word a = gen_word(al, "a"), b = gen_word(al, "b"), t = gen_word(al, "t");
  Word ap = power(a, params.p);
  // t a^p t^-1 (b^-1 a^p)^-1
  Word r1 = concat(conjugate(ap, invert(t)), invert(concat(invert(b), ap)));
  // t b^-q a^-1 t^-1 b^q
  Word r2 = concat(conjugate(concat(power(b, -params.q), invert(a)), invert(t)),
                   power(b, params.q));
  return Presentation{al, {r1, r2}, basis::kLin, params};
}

Presentation surgery_group_std(const DoubleTwistParams& params) {
  Presentation pres = knot_group_lin(params);
  Word a = gen_word(pres.alphabet, "a"), b = gen_word(pres.alphabet, "b");
  pres.relators.push_back(
      commutator(power(b, params.q), power(a, params.p)));
  pres.label = basis::kStd;
  return pres;
}

Word loop_word(const DoubleTwistParams& params) {
  Alphabet al = xy_alphabet();
  Word x = gen_word(al, "x"), y = gen_word(al, "y");
  return concat(power(concat(y, x), params.q), power(concat(x, y), -params.q));
}

Word loop_word_inverse_twist(const DoubleTwistParams& params) {
  Alphabet al = xy_alphabet();
  Word x = gen_word(al, "x"), y = gen_word(al, "y");
  return concat(power(concat(y, x), -params.q), power(concat(x, y), params.q));
}

Word meridian_two_gen() {
  Alphabet al = xy_alphabet();
  return power(gen_word(al, "y"), -1);
}

Presentation knot_group_two_gen(const DoubleTwistParams& params) {
  make_params(params.p, params.q);
  Alphabet al = xy_alphabet();
  Word x = gen_word(al, "x"), y = gen_word(al, "y");
  Word lp = power(loop_word(params), params.p);
  Word r = concat(concat(x, lp), concat(y, invert(lp)));
  return Presentation{al, {r}, basis::kTwoGen, params};
}

Presentation surgery_group_two_gen(const DoubleTwistParams& params) {
  Presentation pres = knot_group_two_gen(params);
  Word r2 = concat(power(loop_word_inverse_twist(params), params.p),
                   power(loop_word(params), params.p));
  pres.relators.push_back(r2);
  pres.label = basis::kTwoGen;
  return pres;
}

Presentation surgery_group_ABT(const DoubleTwistParams& params) {
  make_params(params.p, params.q);
  Alphabet al = abt_upper_alphabet();
  Word A = gen_word(al, "A"), B = gen_word(al, "B"), T = gen_word(al, "T");
  Word aq = power(A, params.q);
  Word r1 = concat(conjugate(aq, invert(T)), invert(concat(invert(B), aq)));
  Word r2 = concat(conjugate(concat(power(B, -params.p), invert(A)), invert(T)),
                   power(B, params.p));
  Word r3 = commutator(power(B, params.p), power(A, params.q));
  return Presentation{al, {r1, r2, r3}, basis::kAbt, params};
}

Presentation complement_group(const DoubleTwistParams& params) {
  make_params(params.p, params.q);
  Alphabet al = Alphabet({"a", "b"});
  Word a = gen_word(al, "a"), b = gen_word(al, "b");
  return Presentation{
      al, {commutator(power(b, params.q), power(a, params.p))},
      basis::kComplement, params};
}

Presentation h_presentation_window(const DoubleTwistParams& params, int window) {
  make_params(params.p, params.q);
  if (window < 1)
    throw std::invalid_argument("h_presentation_window: window must be >= 1");
  std::vector<std::string> names{"tau"};
  for (int i = -window; i <= window; ++i)
    names.push_back("x_" + std::to_string(i));
  Alphabet al{names};
  auto xw = [&](int i, Int exp) {
    return Word::from_syllables(
        al, {Syllable{*al.find("x_" + std::to_string(i)), exp}});
  };
  Word tau = gen_word(al, "tau");

  Int pq = Int(params.p) * params.q;
  std::vector<Word> relators;
  for (int i = -window; i <= window; ++i)
    for (int j = i + 1; j <= window; ++j)
      relators.push_back(commutator(xw(i, 1), xw(j, 1)));
  for (int i = -window + 1; i <= window - 1; ++i)
    relators.push_back(concat(concat(xw(i + 1, pq), xw(i, -(2 * pq + 1))),
                              xw(i - 1, pq)));
  for (int i = -window; i <= window - 1; ++i)
    relators.push_back(concat(conjugate(xw(i, 1), invert(tau)), xw(i + 1, -1)));
  return Presentation{al, std::move(relators), basis::kHWindow, params};
}

GeneratorMap generator_change(const std::string& from, const std::string& to,
                              const DoubleTwistParams& params) {
  make_params(params.p, params.q);
  Alphabet lower = abt_lower_alphabet();
  Alphabet xy = xy_alphabet();
  Alphabet upper = abt_upper_alphabet();

  auto lower_to_xy = [&]() {
    Word x = gen_word(xy, "x"), y = gen_word(xy, "y");
    Word b_img = concat(x, y);
    Word t_img = invert(y);
    // a = t^-1 b^q t b^-q pushed through b->xy, t->y^-1.
    Word a_img = concat(conjugate(power(b_img, params.q), t_img),
                        power(b_img, -params.q));
    return GeneratorMap{lower, xy,
                        {{*lower.find("a"), a_img},
                         {*lower.find("b"), b_img},
                         {*lower.find("t"), t_img}}};
  };

  if ((from == basis::kStd || from == basis::kLin) && to == basis::kTwoGen)
    return lower_to_xy();
  if (from == basis::kTwoGen && to == basis::kStd) {
    Word b = gen_word(lower, "b"), t = gen_word(lower, "t");
    return GeneratorMap{xy, lower,
                        {{*xy.find("x"), concat(b, t)},
                         {*xy.find("y"), invert(t)}}};
  }
  if (from == basis::kAbt && to == basis::kStd) {
    Word a = gen_word(lower, "a"), b = gen_word(lower, "b"),
         t = gen_word(lower, "t");
    return GeneratorMap{upper, lower,
                        {{*upper.find("A"), invert(b)},
                         {*upper.find("B"), a},
                         {*upper.find("T"), concat(invert(a), invert(t))}}};
  }
  if (from == basis::kStd && to == basis::kAbt) {
    Word A = gen_word(upper, "A"), B = gen_word(upper, "B"),
         T = gen_word(upper, "T");
    return GeneratorMap{lower, upper,
                        {{*lower.find("a"), B},
                         {*lower.find("b"), invert(A)},
                         {*lower.find("t"), concat(invert(T), invert(B))}}};
  }
  throw std::invalid_argument("generator_change: unsupported pair " + from +
                              " -> " + to);
}

CandidateElement candidate(const std::string& label, long long n,
                           const std::string& basis_label) {
  if (label == "[xy,yx]") {
    if (basis_label != basis::kTwoGen)
      throw std::invalid_argument("candidate [xy,yx] needs the two_gen basis");
    Alphabet al = xy_alphabet();
    Word x = gen_word(al, "x"), y = gen_word(al, "y");
    return CandidateElement{commutator(concat(x, y), concat(y, x)), label};
  }
  if (label == "[b,t^{-n}bt^n]") {
    if (basis_label != basis::kStd)
      throw std::invalid_argument("candidate [b,t^{-n}bt^n] needs the std basis");
    Alphabet al = abt_lower_alphabet();
    Word b = gen_word(al, "b"), t = gen_word(al, "t");
    return CandidateElement{commutator(b, conjugate(b, power(t, n))),
                            "[b,t^{-" + std::to_string(n) + "}bt^" +
                                std::to_string(n) + "]"};
  }
  if (label == "[B,T^{-n}BT^n]") {
    if (basis_label != basis::kAbt)
      throw std::invalid_argument("candidate [B,T^{-n}BT^n] needs the abt basis");
    Alphabet al = abt_upper_alphabet();
    Word B = gen_word(al, "B"), T = gen_word(al, "T");
    return CandidateElement{commutator(B, conjugate(B, power(T, n))),
                            "[B,T^{-" + std::to_string(n) + "}BT^" +
                                std::to_string(n) + "]"};
  }
  if (label == "a" || label == "b") {
    if (basis_label != basis::kStd)
      throw std::invalid_argument("candidate " + label + " needs the std basis");
    return CandidateElement{gen_word(abt_lower_alphabet(), label.c_str()), label};
  }
  if (label == "[b^{-1},a]") {
    if (basis_label != basis::kStd)
      throw std::invalid_argument("candidate [b^{-1},a] needs the std basis");
    Alphabet al = abt_lower_alphabet();
    return CandidateElement{
        commutator(invert(gen_word(al, "b")), gen_word(al, "a")), label};
  }
  throw std::invalid_argument("unknown candidate label: " + label);
}

}  // namespace gentor
