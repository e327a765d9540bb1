#pragma once
#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace opforge {

// Permutation of [n] = {1..n}, stored as the image array: img[i-1] = sigma(i).
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<int> img) : img_(std::move(img)) {
    std::vector<int> seen(img_.size(), 0);
    for (int v : img_) {
      if (v < 1 || v > static_cast<int>(img_.size()) || seen[v - 1]++)
        throw std::invalid_argument("image array is not a permutation");
    }
  }
  static Perm identity(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    return Perm(std::move(v));
  }
  // Adjacent transposition (i, i+1), 1 <= i < n.
  static Perm transposition(int n, int i) {
    if (i < 1 || i >= n) throw std::invalid_argument("transposition out of range");
    Perm p = identity(n);
    std::swap(p.img_[i - 1], p.img_[i]);
    return p;
  }

  int n() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_[i - 1]; }
  const std::vector<int>& image() const { return img_; }

  bool is_identity() const {
    for (int i = 1; i <= n(); ++i)
      if (img_[i - 1] != i) return false;
    return true;
  }

  friend bool operator==(const Perm& a, const Perm& b) { return a.img_ == b.img_; }
  friend bool operator<(const Perm& a, const Perm& b) { return a.img_ < b.img_; }

  std::string str() const {
    std::string s = "[";
    for (size_t i = 0; i < img_.size(); ++i)
      s += (i ? "," : "") + std::to_string(img_[i]);
    return s + "]";
  }

 private:
  std::vector<int> img_;
};

// (a*b)(i) = a(b(i)).
inline Perm compose(const Perm& a, const Perm& b) {
  if (a.n() != b.n()) throw std::invalid_argument("composing permutations of different degree");
  std::vector<int> v(a.n());
  for (int i = 1; i <= a.n(); ++i) v[i - 1] = a(b(i));
  return Perm(std::move(v));
}

inline Perm inverse(const Perm& p) {
  std::vector<int> v(p.n());
  for (int i = 1; i <= p.n(); ++i) v[p(i) - 1] = i;
  return Perm(std::move(v));
}

inline int perm_sign(const Perm& p) {
  int s = 1;
  for (int i = 1; i <= p.n(); ++i)
    for (int j = i + 1; j <= p.n(); ++j)
      if (p(i) > p(j)) s = -s;
  return s;
}

inline std::set<int> apply_perm(const Perm& p, const std::set<int>& J) {
  std::set<int> out;
  for (int i : J) out.insert(p(i));
  return out;
}

inline std::vector<Perm> all_perms(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  std::vector<Perm> out;
  do {
    out.push_back(Perm(v));
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

// Writes sigma as a product of adjacent transpositions: sigma = s_{w[0]} * s_{w[1]} * ...
// (composition as in compose(), leftmost applied last).
inline std::vector<int> adjacent_word(const Perm& sigma) {
  std::vector<int> a = sigma.image();
  std::vector<int> word;
  // Selection-free bubble sort; swapping positions (i,i+1) of the image array
  // corresponds to left-multiplying by s_i after inversion bookkeeping.
  bool moved = true;
  while (moved) {
    moved = false;
    for (size_t i = 0; i + 1 < a.size(); ++i) {
      if (a[i] > a[i + 1]) {
        std::swap(a[i], a[i + 1]);
        word.push_back(static_cast<int>(i + 1));
        moved = true;
      }
    }
  }
  // word sorts sigma to identity from the right: sigma * s_{w0} * s_{w1} ... = id,
  // hence sigma = s_{wk} * ... * s_{w0} reversed with each s self-inverse.
  std::reverse(word.begin(), word.end());
  return word;
}

}  // namespace opforge
