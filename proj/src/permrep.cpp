#include "gentor/permrep.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace gentor {

const Permutation& PermAssignment::image_of(int gen) const {
  auto it = images.find(gen);
  if (it == images.end())
    throw std::invalid_argument("evaluate: unassigned generator");
  return it->second;
}

PermAssignment make_assignment(const Alphabet& alphabet,
                               const std::vector<Permutation>& images) {
  if (static_cast<int>(images.size()) != alphabet.size())
    throw std::invalid_argument("assignment needs one image per generator");
  PermAssignment asg{images.empty() ? 1 : images.front().points(), {}};
  for (int i = 0; i < alphabet.size(); ++i) {
    if (images[static_cast<std::size_t>(i)].points() != asg.points)
      throw std::invalid_argument("assignment images differ in degree");
    asg.images.emplace(i, images[static_cast<std::size_t>(i)]);
  }
  return asg;
}

Permutation evaluate(const Word& w, const PermAssignment& assignment) {
  Permutation res = Permutation::identity(assignment.points);
  for (const auto& s : w.syllables())
    res = perm_compose(res, perm_power(assignment.image_of(s.gen), s.exp));
  return res;
}

bool is_homomorphism(const Presentation& pres, const PermAssignment& assignment) {
  for (const auto& r : pres.relators)
    if (!evaluate(r, assignment).is_identity()) return false;
  return true;
}

namespace {

constexpr int kMaxPoints = 16;

// Letter codes in application order (rightmost letter of the word acts
// first): 0 = x, 1 = x^-1, 2 = y, 3 = y^-1.
enum : uint8_t { kX = 0, kXInv = 1, kY = 2, kYInv = 3 };

std::vector<uint8_t> compile_letters(const Word& w) {
  const Alphabet al = w.alphabet();
  auto x_id = al.find("x"), y_id = al.find("y");
  if (!x_id || !y_id)
    throw std::invalid_argument("search words must be over the {x,y} alphabet");
  if (w.letter_length() > 1'000'000)
    throw std::length_error("search word too long to flatten");
  std::vector<uint8_t> letters;
  const auto& sylls = w.syllables();
  for (auto it = sylls.rbegin(); it != sylls.rend(); ++it) {
    bool inv = it->exp < 0;
    auto count = static_cast<long long>(abs(it->exp));
    uint8_t code = it->gen == *x_id ? (inv ? kXInv : kX) : (inv ? kYInv : kY);
    for (long long i = 0; i < count; ++i) letters.push_back(code);
  }
  return letters;
}

// Backtracking search over images of y with x fixed. Relators are traced
// from every point; a trace with a single undefined y step forces that step,
// and a closed trace that misses its start point kills the branch.
class YSearcher {
 public:
  YSearcher(int points, std::vector<int> x_images,
            std::vector<std::vector<uint8_t>> relators,
            std::vector<uint8_t> candidate)
      : npts_(points),
        rels_(std::move(relators)),
        cand_(std::move(candidate)) {
    if (points < 1 || points > kMaxPoints)
      throw std::invalid_argument("search degree out of range");
    for (int i = 0; i < npts_; ++i) {
      ximg_[i] = x_images[static_cast<std::size_t>(i)];
      xpre_[ximg_[i]] = i;
      yimg_[i] = -1;
      ypre_[i] = -1;
    }
  }

  bool propagate() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& rel : rels_)
        for (int start = 0; start < npts_; ++start) {
          int verdict = trace(rel, start);
          if (verdict < 0) return false;
          changed = changed || verdict > 0;
        }
    }
    return true;
  }

  // Explores the subtree under the current partial assignment; fills
  // *found with the first (lexicographically minimal) witness y array.
  bool dfs(std::vector<int>* found, const std::atomic<int>* cancel_below,
           int shard_index) {
    if (cancel_below != nullptr &&
        shard_index > cancel_below->load(std::memory_order_relaxed))
      return false;
    int u = 0;
    while (u < npts_ && yimg_[u] != -1) ++u;
    if (u == npts_) {
      if (!candidate_nontrivial()) return false;
      found->assign(yimg_, yimg_ + npts_);
      return true;
    }
    for (int v = 0; v < npts_; ++v) {
      if (ypre_[v] != -1) continue;
      std::size_t mark = trail_.size();
      assign(u, v);
      if (propagate() && dfs(found, cancel_below, shard_index)) return true;
      unwind(mark);
    }
    return false;
  }

  int first_unassigned() const {
    for (int u = 0; u < npts_; ++u)
      if (yimg_[u] == -1) return u;
    return npts_;
  }

  bool value_free(int v) const { return ypre_[v] == -1; }

  void assign(int u, int v) {
    yimg_[u] = v;
    ypre_[v] = u;
    trail_.push_back(u);
  }

  void unwind(std::size_t mark) {
    while (trail_.size() > mark) {
      int u = trail_.back();
      trail_.pop_back();
      ypre_[yimg_[u]] = -1;
      yimg_[u] = -1;
    }
  }

 private:
  int apply(uint8_t code, int pt) const {
    switch (code) {
      case kX: return ximg_[pt];
      case kXInv: return xpre_[pt];
      case kY: return yimg_[pt];
      default: return ypre_[pt];
    }
  }

  int apply_inverse(uint8_t code, int pt) const {
    return apply(code ^ 1, pt);
  }

  // Returns -1 on contradiction, 1 if a value was deduced, 0 otherwise.
  int trace(const std::vector<uint8_t>& rel, int start) {
    int pos = start;
    std::size_t f = 0;
    for (; f < rel.size(); ++f) {
      int nxt = apply(rel[f], pos);
      if (nxt < 0) break;
      pos = nxt;
    }
    if (f == rel.size()) return pos == start ? 0 : -1;

    int bpos = start;
    std::size_t b = rel.size();
    for (; b > f + 1; --b) {
      int prv = apply_inverse(rel[b - 1], bpos);
      if (prv < 0) break;
      bpos = prv;
    }
    if (b > f + 1) return 0;  // two or more gaps, nothing to learn

    // Single undefined letter rel[f] must map pos -> bpos; x is total, so it
    // is a y letter.
    int u = rel[f] == kY ? pos : bpos;
    int v = rel[f] == kY ? bpos : pos;
    if (yimg_[u] == v) return 0;
    if (yimg_[u] != -1 || ypre_[v] != -1) return -1;
    assign(u, v);
    return 1;
  }

  bool candidate_nontrivial() const {
    for (int start = 0; start < npts_; ++start) {
      int pos = start;
      for (uint8_t code : cand_) pos = apply(code, pos);
      if (pos != start) return true;
    }
    return false;
  }

  int npts_;
  std::vector<std::vector<uint8_t>> rels_;
  std::vector<uint8_t> cand_;
  int ximg_[kMaxPoints] = {};
  int xpre_[kMaxPoints] = {};
  int yimg_[kMaxPoints] = {};
  int ypre_[kMaxPoints] = {};
  std::vector<int> trail_;
};

std::vector<int> full_cycle_images(int points) {
  std::vector<int> img(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) img[static_cast<std::size_t>(i)] = (i + 1) % points;
  return img;
}

// Minimal y image array under a fixed x, or nothing. Shards the first branch
// point across threads; the merge keeps the smallest shard that found a
// witness, so the outcome does not depend on the thread count.
std::optional<std::vector<int>> search_y_minimal(
    int points, const std::vector<int>& x_images,
    const std::vector<std::vector<uint8_t>>& relators,
    const std::vector<uint8_t>& candidate, int threads) {
  YSearcher root(points, x_images, relators, candidate);
  if (!root.propagate()) return std::nullopt;
  int u0 = root.first_unassigned();
  if (u0 == points) {
    std::vector<int> done;
    return root.dfs(&done, nullptr, 0) ? std::optional(done) : std::nullopt;
  }

  std::vector<int> values;
  for (int v = 0; v < points; ++v)
    if (root.value_free(v)) values.push_back(v);

  std::vector<std::optional<std::vector<int>>> results(values.size());
  std::atomic<int> best_shard{static_cast<int>(values.size())};

  auto run_shard = [&](std::size_t idx) {
    if (static_cast<int>(idx) > best_shard.load(std::memory_order_relaxed))
      return;
    YSearcher shard = root;
    shard.assign(u0, values[idx]);
    std::vector<int> found;
    if (shard.propagate() &&
        shard.dfs(&found, &best_shard, static_cast<int>(idx))) {
      results[idx] = found;
      int self = static_cast<int>(idx);
      int cur = best_shard.load();
      while (self < cur && !best_shard.compare_exchange_weak(cur, self)) {
      }
    }
  };

  int nthreads = std::max(1, threads);
  if (nthreads == 1) {
    for (std::size_t i = 0; i < values.size(); ++i) {
      run_shard(i);
      if (results[i]) break;  // earlier shards exhausted, this is minimal
    }
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (int t = 0; t < nthreads; ++t)
      pool.emplace_back([&] {
        for (;;) {
          std::size_t i = next.fetch_add(1);
          if (i >= values.size()) return;
          run_shard(i);
        }
      });
    for (auto& th : pool) th.join();
  }

  for (auto& r : results)
    if (r) return r;
  return std::nullopt;
}

std::vector<std::vector<uint8_t>> compiled_relators(
    const DoubleTwistParams& params) {
  Presentation pres = surgery_group_two_gen(params);
  std::vector<std::vector<uint8_t>> rels;
  rels.reserve(pres.relators.size());
  for (const auto& r : pres.relators) rels.push_back(compile_letters(r));
  return rels;
}

Permutation ppow(const Permutation& a, long long e) {
  Permutation base = e < 0 ? perm_inverse(a) : a;
  long long k = e < 0 ? -e : e;
  Permutation res = Permutation::identity(a.points());
  while (k > 0) {
    if (k & 1) res = perm_compose(res, base);
    k >>= 1;
    if (k > 0) base = perm_compose(base, base);
  }
  return res;
}

}  // namespace

bool verify_witness(const WitnessRecord& rec) {
  if (rec.x_image.points() != rec.degree + 1 ||
      rec.y_image.points() != rec.degree + 1)
    return false;
  Alphabet al = xy_alphabet();
  PermAssignment asg = make_assignment(al, {rec.x_image, rec.y_image});
  Presentation pres = surgery_group_two_gen(rec.params);
  if (!is_homomorphism(pres, asg)) return false;
  Word cand_word(al);
  try {
    cand_word = parse_word(al, rec.candidate_label);
  } catch (const std::invalid_argument&) {
    return false;
  }
  Permutation image = evaluate(cand_word, asg);
  return image == rec.candidate_image && !image.is_identity();
}

WitnessRecord make_witness_record(const DoubleTwistParams& params, int degree,
                                  Permutation x_image, Permutation y_image,
                                  const CandidateElement& cand) {
  Alphabet al = xy_alphabet();
  PermAssignment asg = make_assignment(al, {x_image, y_image});
  WitnessRecord rec{params,       degree,       std::move(x_image),
                    std::move(y_image), cand.label, evaluate(cand.word, asg)};
  if (!verify_witness(rec))
    throw std::invalid_argument("witness record fails verification");
  return rec;
}

std::optional<WitnessRecord> search_witness(const DoubleTwistParams& params,
                                            int degree,
                                            const CandidateElement& cand,
                                            const SearchOptions& options) {
  make_params(params.p, params.q);
  if (degree < 1) throw std::invalid_argument("search degree must be >= 1");
  int points = degree + 1;
  auto rels = compiled_relators(params);
  auto cand_letters = compile_letters(cand.word);

  if (options.x_full_cycle) {
    auto y = search_y_minimal(points, full_cycle_images(points), rels,
                              cand_letters, options.threads);
    if (!y) return std::nullopt;
    return make_witness_record(params, degree,
                               Permutation(full_cycle_images(points)),
                               Permutation(*y), cand);
  }

  // Unconstrained mode: enumerate x images in lexicographic order and take
  // the first x admitting a witness (minimal y under that x).
  if (degree > 6)
    throw std::invalid_argument(
        "unconstrained search is limited to degree <= 6");
  std::vector<int> ximg(static_cast<std::size_t>(points));
  std::iota(ximg.begin(), ximg.end(), 0);
  do {
    auto y = search_y_minimal(points, ximg, rels, cand_letters, options.threads);
    if (y)
      return make_witness_record(params, degree, Permutation(ximg),
                                 Permutation(*y), cand);
  } while (std::next_permutation(ximg.begin(), ximg.end()));
  return std::nullopt;
}

std::optional<WitnessRecord> search_exhaustive_oracle(
    const DoubleTwistParams& params, int degree, const CandidateElement& cand) {
  make_params(params.p, params.q);
  if (degree < 1) throw std::invalid_argument("search degree must be >= 1");
  if (degree > 9)
    throw std::invalid_argument("exhaustive oracle is limited to degree <= 9");
  int points = degree + 1;
  Permutation x(full_cycle_images(points));
  Alphabet al = xy_alphabet();
  long long p = params.p, q = params.q;

  std::vector<int> yimg(static_cast<std::size_t>(points));
  std::iota(yimg.begin(), yimg.end(), 0);
  do {
    Permutation y(yimg);
    // Straight-line relator evaluation with the shared subwords cached:
    // L = (yx)^q (xy)^-q and L' = (yx)^-q (xy)^q.
    Permutation xy = perm_compose(x, y);
    Permutation yx = perm_compose(y, x);
    Permutation yx_q = ppow(yx, q);
    Permutation xy_q = ppow(xy, q);
    Permutation loop = perm_compose(yx_q, perm_inverse(xy_q));
    Permutation loop_p = ppow(loop, p);
    Permutation r1 = perm_compose(perm_compose(x, loop_p),
                                  perm_compose(y, perm_inverse(loop_p)));
    if (!r1.is_identity()) continue;
    Permutation loop2 = perm_compose(perm_inverse(yx_q), xy_q);
    if (!perm_compose(ppow(loop2, p), loop_p).is_identity()) continue;
    PermAssignment asg = make_assignment(al, {x, y});
    if (evaluate(cand.word, asg).is_identity()) continue;
    return make_witness_record(params, degree, x, y, cand);
  } while (std::next_permutation(yimg.begin(), yimg.end()));
  return std::nullopt;
}

std::vector<WitnessRecord> search_range(const DoubleTwistParams& params,
                                        int max_degree,
                                        const CandidateElement& cand,
                                        const SearchOptions& options) {
  std::vector<WitnessRecord> found;
  for (int degree = 1; degree <= max_degree; ++degree) {
    auto rec = search_witness(params, degree, cand, options);
    if (rec) found.push_back(std::move(*rec));
  }
  return found;
}

}  // namespace gentor
