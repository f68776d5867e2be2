#include "gentor/biorder.hpp"

#include <sstream>
#include <stdexcept>

namespace gentor {

namespace {

// floor(sqrt(n)) test; cpp_int sqrt truncates.
bool perfect_square(const Int& n, Int* root) {
  if (n < 0) return false;
  Int r = boost::multiprecision::sqrt(n);
  if (r * r == n) {
    *root = r;
    return true;
  }
  return false;
}

void require_same_field(const QuadExt& u, const QuadExt& v) {
  if (u.discriminant() != v.discriminant())
    throw std::invalid_argument("quadratic extension mismatch");
}

}  // namespace

QuadExt::QuadExt(Rational rational_part, Rational radical_coeff, Int discriminant)
    : a_(std::move(rational_part)), b_(std::move(radical_coeff)), d_(std::move(discriminant)) {
  if (d_ <= 0) throw std::invalid_argument("discriminant must be positive");
  Int root;
  if (b_ != 0 && perfect_square(d_, &root)) {
    a_ += b_ * root;
    b_ = 0;
  }
}

int QuadExt::sign() const {
  int sa = a_ == 0 ? 0 : (a_ > 0 ? 1 : -1);
  int sb = b_ == 0 ? 0 : (b_ > 0 ? 1 : -1);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: |a| vs |b| sqrt(D) decided by squaring.
  Rational a2 = a_ * a_;
  Rational b2d = b_ * b_ * Rational(d_);
  if (a2 == b2d) return 0;  // only possible when D is a square (then b_=0)
  return a2 > b2d ? sa : sb;
}

QuadExt QuadExt::operator-() const { return QuadExt(-a_, -b_, d_); }

QuadExt operator+(const QuadExt& u, const QuadExt& v) {
  require_same_field(u, v);
  return QuadExt(u.a_ + v.a_, u.b_ + v.b_, u.d_);
}

QuadExt operator-(const QuadExt& u, const QuadExt& v) {
  require_same_field(u, v);
  return QuadExt(u.a_ - v.a_, u.b_ - v.b_, u.d_);
}

QuadExt operator*(const QuadExt& u, const QuadExt& v) {
  require_same_field(u, v);
  return QuadExt(u.a_ * v.a_ + u.b_ * v.b_ * Rational(u.d_),
                 u.a_ * v.b_ + u.b_ * v.a_, u.d_);
}

QuadExt operator*(const Rational& s, const QuadExt& v) {
  return QuadExt(s * v.a_, s * v.b_, v.d_);
}

QuadExt operator/(const QuadExt& u, const QuadExt& v) {
  require_same_field(u, v);
  // Multiply by the conjugate; the norm a^2 - b^2 D is non-zero for v != 0.
  Rational norm = v.a_ * v.a_ - v.b_ * v.b_ * Rational(v.d_);
  if (norm == 0) throw std::domain_error("division by zero quadratic number");
  QuadExt conj(v.a_, -v.b_, v.d_);
  QuadExt num = u * conj;
  return QuadExt(num.a_ / norm, num.b_ / norm, u.d_);
}

bool QuadExt::operator==(const QuadExt& other) const {
  require_same_field(*this, other);
  return a_ == other.a_ && b_ == other.b_;
}

std::strong_ordering QuadExt::operator<=>(const QuadExt& other) const {
  int s = (*this - other).sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string to_text(const QuadExt& x) {
  std::ostringstream os;
  if (x.radical_coeff() == 0) {
    os << to_text(x.rational_part());
  } else {
    os << to_text(x.rational_part()) << (x.radical_coeff() > 0 ? " + " : " - ");
    Rational c = x.radical_coeff() > 0 ? x.radical_coeff() : Rational(-x.radical_coeff());
    if (c != 1) os << to_text(c) << "*";
    os << "sqrt(" << x.discriminant().str() << ")";
  }
  return os.str();
}

KContext make_k_context(long long p, long long q) {
  if (p < 1 || q < 1)
    throw std::invalid_argument("k context needs positive p and q");
  Int pq = Int(p) * q;
  Matrix2 action{{Rational(1), Rational(-1, q), Rational(-1, p),
                  Rational(1) + Rational(1, pq)}};
  return KContext{p, q, action, 4 * pq + 1};
}

Eigenbasis eigenbasis(long long p, long long q) {
  KContext ctx = make_k_context(p, q);
  Int pq = Int(p) * q;
  const Int& d = ctx.discriminant;
  QuadExt lp(Rational(2 * pq + 1, 2 * pq), Rational(1, 2 * pq), d);
  QuadExt lm(Rational(2 * pq + 1, 2 * pq), Rational(-1, 2 * pq), d);
  // V_+- = (1 / (2 sqrt(D))) (-2p, 1 +- sqrt(D)); rationalized components.
  QuadExt vx(Rational(0), Rational(-p, d), d);
  QuadExt vy_plus(Rational(1, 2), Rational(1, 2 * d), d);
  QuadExt vy_minus(Rational(-1, 2), Rational(1, 2 * d), d);
  return Eigenbasis{lp, lm, {vx, vy_plus}, {vx, vy_minus}};
}

KElement::KElement(KContext ctx, QuadExt s, QuadExt l, QuadExt cp, QuadExt cm,
                   Int level)
    : ctx_(std::move(ctx)),
      s_(std::move(s)),
      l_(std::move(l)),
      cplus_(std::move(cp)),
      cminus_(std::move(cm)),
      level_(std::move(level)) {}

KElement KElement::identity(const KContext& ctx) {
  return from_raw(ctx, QuadExt::of(Rational(0), ctx.discriminant),
                  QuadExt::of(Rational(0), ctx.discriminant), 0);
}

KElement KElement::from_raw(const KContext& ctx, QuadExt s, QuadExt l, Int level) {
  const Int& d = ctx.discriminant;
  // In the eigenbasis, (s,l) = alpha V_+ + beta V_- with
  // alpha = l + (s/p)(1 - sqrt(D))/2 and beta = -l - (s/p)(1 + sqrt(D))/2.
  QuadExt half_s_over_p = Rational(1, 2 * ctx.p) * s;
  QuadExt sqrt_d(Rational(0), Rational(1), d);
  QuadExt alpha = l + half_s_over_p - half_s_over_p * sqrt_d;
  QuadExt beta = -l - half_s_over_p - half_s_over_p * sqrt_d;
  return KElement(ctx, std::move(s), std::move(l), std::move(alpha),
                  std::move(beta), std::move(level));
}

bool KElement::operator==(const KElement& other) const {
  return ctx_ == other.ctx_ && level_ == other.level_ && s_ == other.s_ &&
         l_ == other.l_;
}

namespace {

long long level_as_long(const Int& level) {
  if (level > 1'000'000 || level < -1'000'000)
    throw std::overflow_error("k level too large for matrix power");
  return static_cast<long long>(level);
}

std::pair<QuadExt, QuadExt> apply_action(const KContext& ctx, const Int& power_,
                                         const QuadExt& s, const QuadExt& l) {
  Matrix2 m = mat_power(ctx.action, level_as_long(power_));
  return {QuadExt::of(m.at(0, 0), ctx.discriminant) * s +
              QuadExt::of(m.at(0, 1), ctx.discriminant) * l,
          QuadExt::of(m.at(1, 0), ctx.discriminant) * s +
              QuadExt::of(m.at(1, 1), ctx.discriminant) * l};
}

}  // namespace

KElement k_multiply(const KElement& e1, const KElement& e2) {
  if (!(e1.context() == e2.context()))
    throw std::invalid_argument("k_multiply: context mismatch");
  auto [ts, tl] = apply_action(e1.context(), e1.level(), e2.raw_s(), e2.raw_l());
  return KElement::from_raw(e1.context(), e1.raw_s() + ts, e1.raw_l() + tl,
                            e1.level() + e2.level());
}

std::strong_ordering k_compare(const KElement& e1, const KElement& e2) {
  if (!(e1.context() == e2.context()))
    throw std::invalid_argument("k_compare: context mismatch");
  if (e1.level() != e2.level())
    return e1.level() < e2.level() ? std::strong_ordering::less
                                   : std::strong_ordering::greater;
  auto c = e1.coeff_plus() <=> e2.coeff_plus();
  if (c != std::strong_ordering::equal) return c;
  return e1.coeff_minus() <=> e2.coeff_minus();
}

Int rho(const Word& w) {
  auto t = w.alphabet().find("t");
  if (!t) throw std::invalid_argument("rho: alphabet has no generator t");
  return exponent_sum(w, *t);
}

XWord to_xword(const Word& w) {
  auto b = w.alphabet().find("b");
  auto t = w.alphabet().find("t");
  if (!b || !t)
    throw std::invalid_argument("to_xword: word must be over {b, t}");
  XWord xw{{}, 0};
  Int depth = 0;
  for (const auto& s : w.syllables()) {
    if (s.gen == *t) {
      depth += s.exp;
    } else if (s.gen == *b) {
      xw.runs.emplace_back(depth, s.exp);
    } else {
      throw std::invalid_argument("to_xword: generator " +
                                  w.alphabet().generator(s.gen).name +
                                  " is not b or t");
    }
  }
  xw.level = depth;
  return xw;
}

std::pair<QuadExt, QuadExt> r_map(const KContext& ctx, const XWord& xw) {
  if (xw.level != 0)
    throw std::invalid_argument("r_map: element is not in the kernel");
  QuadExt s = QuadExt::of(Rational(0), ctx.discriminant);
  QuadExt l = s;
  for (const auto& [depth, exp] : xw.runs) {
    Matrix2 m = mat_power(ctx.action, level_as_long(depth));
    s = s + QuadExt::of(Rational(exp) * m.at(0, 1), ctx.discriminant);
    l = l + QuadExt::of(Rational(exp) * m.at(1, 1), ctx.discriminant);
  }
  return {s, l};
}

KElement phi(const KContext& ctx, const Word& w) {
  Alphabet lower = abt_lower_alphabet();
  Alphabet bt({"b", "t"});
  if (w.alphabet() != lower && w.alphabet() != bt)
    throw std::invalid_argument("phi: word must be over {a, b, t} or {b, t}");

  Word b = Word::from_syllables(bt, {Syllable{*bt.find("b"), 1}});
  Word t = Word::from_syllables(bt, {Syllable{*bt.find("t"), 1}});
  Word expanded(bt);
  if (w.alphabet() == lower) {
    // a = t^-1 b^q t b^-q.
    Word a_img = concat(conjugate(power(b, ctx.q), t), power(b, -ctx.q));
    GeneratorMap expand{lower, bt,
                        {{*lower.find("a"), a_img},
                         {*lower.find("b"), b},
                         {*lower.find("t"), t}}};
    expanded = substitute(w, expand);
  } else {
    expanded = w;
  }

  Int level = exponent_sum(expanded, *bt.find("t"));
  XWord xw = to_xword(concat(expanded, power(t, -level)));
  auto [s, l] = r_map(ctx, xw);
  return KElement::from_raw(ctx, s, l, level);
}

std::strong_ordering word_sign(const KContext& ctx, const Word& w) {
  return k_compare(phi(ctx, w), KElement::identity(ctx));
}

}  // namespace gentor
