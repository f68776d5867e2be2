#ifndef GENTOR_PERMUTATION_HPP
#define GENTOR_PERMUTATION_HPP

#include "gentor/word.hpp"

#include <string>
#include <vector>

namespace gentor {

/// Permutation of the points {0..n}, stored as the image array [a_0,...,a_n].
/// Degree means n here; the permutation moves n+1 points.
class Permutation {
 public:
  explicit Permutation(std::vector<int> images);  // validates bijection
  static Permutation identity(int points);

  int points() const { return static_cast<int>(img_.size()); }
  int degree() const { return points() - 1; }
  int operator()(int i) const { return img_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& images() const { return img_; }
  bool is_identity() const;

  bool operator==(const Permutation&) const = default;
  // Lexicographic order on image arrays (used for minimal-witness ties).
  bool operator<(const Permutation& other) const { return img_ < other.img_; }

 private:
  std::vector<int> img_;
};

/// Product a·b with b carried out first: (a·b)(i) = a(b(i)).
Permutation perm_compose(const Permutation& a, const Permutation& b);

Permutation perm_inverse(const Permutation& a);

/// a^e for any integer exponent; exponents reduce modulo the element order.
Permutation perm_power(const Permutation& a, const Int& e);

/// Cycle lengths in decreasing order, fixed points included.
std::vector<int> cycle_type(const Permutation& a);

/// Order of the permutation (lcm of cycle lengths).
Int perm_order(const Permutation& a);

/// "[1,2,0]" style formatting and parsing.
std::string to_text(const Permutation& a);
Permutation parse_permutation(std::string_view text);

}  // namespace gentor

#endif  // GENTOR_PERMUTATION_HPP
