#include "gentor/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace gentor {

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
  if (img_.empty()) throw std::invalid_argument("permutation of zero points");
  std::vector<bool> seen(img_.size(), false);
  for (int v : img_) {
    if (v < 0 || v >= points() || seen[static_cast<std::size_t>(v)])
      throw std::invalid_argument("permutation images are not a bijection");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int points) {
  std::vector<int> img(static_cast<std::size_t>(points));
  std::iota(img.begin(), img.end(), 0);
  return Permutation(std::move(img));
}

bool Permutation::is_identity() const {
  for (int i = 0; i < points(); ++i)
    if (img_[static_cast<std::size_t>(i)] != i) return false;
  return true;
}

Permutation perm_compose(const Permutation& a, const Permutation& b) {
  if (a.points() != b.points())
    throw std::invalid_argument("perm_compose: degree mismatch");
  std::vector<int> img(static_cast<std::size_t>(a.points()));
  for (int i = 0; i < a.points(); ++i) img[static_cast<std::size_t>(i)] = a(b(i));
  return Permutation(std::move(img));
}

Permutation perm_inverse(const Permutation& a) {
  std::vector<int> img(static_cast<std::size_t>(a.points()));
  for (int i = 0; i < a.points(); ++i) img[static_cast<std::size_t>(a(i))] = i;
  return Permutation(std::move(img));
}

Permutation perm_power(const Permutation& a, const Int& e) {
  Int ord = perm_order(a);
  Int r = e % ord;
  if (r < 0) r += ord;
  auto k = static_cast<long long>(r);
  Permutation res = Permutation::identity(a.points());
  Permutation base = a;
  while (k > 0) {
    if (k & 1) res = perm_compose(res, base);
    k >>= 1;
    if (k > 0) base = perm_compose(base, base);
  }
  return res;
}

std::vector<int> cycle_type(const Permutation& a) {
  std::vector<bool> seen(static_cast<std::size_t>(a.points()), false);
  std::vector<int> cycles;
  for (int i = 0; i < a.points(); ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    int len = 0, j = i;
    while (!seen[static_cast<std::size_t>(j)]) {
      seen[static_cast<std::size_t>(j)] = true;
      j = a(j);
      ++len;
    }
    cycles.push_back(len);
  }
  std::sort(cycles.rbegin(), cycles.rend());
  return cycles;
}

Int perm_order(const Permutation& a) {
  Int ord = 1;
  for (int len : cycle_type(a)) ord = boost::multiprecision::lcm(ord, Int(len));
  return ord;
}

std::string to_text(const Permutation& a) {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < a.points(); ++i) {
    if (i) os << ',';
    os << a(i);
  }
  os << ']';
  return os.str();
}

Permutation parse_permutation(std::string_view text) {
  std::vector<int> img;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip();
  if (i >= text.size() || text[i] != '[')
    throw std::invalid_argument("permutation parse: expected '['");
  ++i;
  for (;;) {
    skip();
    if (i < text.size() && text[i] == ']') {
      ++i;
      break;
    }
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == start)
      throw std::invalid_argument("permutation parse: expected digit");
    img.push_back(std::stoi(std::string(text.substr(start, i - start))));
    skip();
    if (i < text.size() && text[i] == ',') ++i;
  }
  skip();
  if (i != text.size())
    throw std::invalid_argument("permutation parse: trailing characters");
  return Permutation(std::move(img));
}

}  // namespace gentor
