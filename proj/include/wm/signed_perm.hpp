#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "wm/limits.hpp"

namespace wm {

enum class Family { A, BC, D };

inline std::string family_name(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::BC: return "BC";
    case Family::D: return "D";
  }
  return "?";
}

inline Family parse_family(std::string_view s) {
  if (s == "A") return Family::A;
  if (s == "BC" || s == "B" || s == "C") return Family::BC;
  if (s == "D") return Family::D;
  throw std::invalid_argument("unknown group family '" + std::string(s) + "'");
}

/// Weyl group of type A_{d-1} (S_d), B_d/C_d (signed permutations) or D_d.
struct GroupFamily {
  Family tag;
  unsigned rank;

  GroupFamily(Family f, unsigned d) : tag(f), rank(d) {
    if (d == 0) throw std::invalid_argument("GroupFamily: rank must be at least 1");
  }

  /// d!, 2^d d! and 2^{d-1} d! respectively.
  std::uint64_t order() const {
    std::uint64_t n = 1;
    for (unsigned i = 2; i <= rank; ++i) n *= i;
    if (tag == Family::BC) n <<= rank;
    if (tag == Family::D) n <<= (rank - 1);
    return n;
  }

  /// Generators are numbered 1..generator_count().
  unsigned generator_count() const {
    switch (tag) {
      case Family::A: return rank - 1;
      case Family::BC: return rank;
      case Family::D: return rank >= 2 ? rank : 0;
    }
    return 0;
  }
};

/// Total order on nonzero integers: 1 < 2 < ... < d < -d < ... < -2 < -1.
inline bool pm_less(int a, int b) {
  if (a == 0 || b == 0) throw std::invalid_argument("pm_less: arguments must be nonzero");
  if ((a > 0) != (b > 0)) return a > 0;
  return a < b;
}

/// Element of the hyperoctahedral group in one-line notation: images[i-1] = sigma(i).
class SignedPerm {
 public:
  SignedPerm() = default;

  explicit SignedPerm(std::vector<int> images) : images_(std::move(images)) {
    const int d = static_cast<int>(images_.size());
    std::vector<bool> seen(images_.size() + 1, false);
    for (int v : images_) {
      const int a = std::abs(v);
      if (v == 0 || a > d || seen[a]) {
        throw std::invalid_argument("SignedPerm: " + to_string() + " is not a signed permutation");
      }
      seen[a] = true;
    }
  }

  static SignedPerm identity(unsigned d) {
    std::vector<int> v(d);
    for (unsigned i = 0; i < d; ++i) v[i] = static_cast<int>(i) + 1;
    return SignedPerm(std::move(v));
  }

  /// The central element c(i) = -i.
  static SignedPerm central(unsigned d) {
    std::vector<int> v(d);
    for (unsigned i = 0; i < d; ++i) v[i] = -static_cast<int>(i) - 1;
    return SignedPerm(std::move(v));
  }

  /// Parses "-5,3,-1,6,4,-2" (surrounding parentheses and spaces allowed).
  static SignedPerm parse(std::string_view text) {
    std::string cleaned;
    for (char c : text) {
      if (c != '(' && c != ')' && c != ' ') cleaned += c;
    }
    std::vector<int> v;
    if (!cleaned.empty()) {
      std::stringstream ss(cleaned);
      std::string item;
      while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        int value = 0;
        try {
          value = std::stoi(item, &used);
        } catch (const std::exception&) {
          throw std::invalid_argument("SignedPerm::parse: bad entry '" + item + "'");
        }
        if (used != item.size()) throw std::invalid_argument("SignedPerm::parse: bad entry '" + item + "'");
        v.push_back(value);
      }
    }
    return SignedPerm(std::move(v));
  }

  unsigned rank() const noexcept { return static_cast<unsigned>(images_.size()); }
  std::span<const int> images() const noexcept { return images_; }

  /// sigma(i) for i in {+-1, ..., +-d}, using sigma(-i) = -sigma(i).
  int operator()(int i) const {
    const int a = std::abs(i);
    if (a == 0 || a > static_cast<int>(images_.size())) throw std::out_of_range("SignedPerm: index out of range");
    return i > 0 ? images_[a - 1] : -images_[a - 1];
  }

  unsigned negative_count() const {
    return static_cast<unsigned>(std::count_if(images_.begin(), images_.end(), [](int v) { return v < 0; }));
  }
  bool is_unsigned() const { return negative_count() == 0; }
  bool is_even() const { return negative_count() % 2 == 0; }

  bool belongs_to(Family f) const {
    switch (f) {
      case Family::A: return is_unsigned();
      case Family::BC: return true;
      case Family::D: return is_even();
    }
    return false;
  }

  /// (this o tau)(i) = this(tau(i)).
  SignedPerm compose(const SignedPerm& tau) const {
    if (tau.rank() != rank()) throw std::invalid_argument("SignedPerm::compose: rank mismatch");
    std::vector<int> v(images_.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = (*this)(tau.images_[i]);
    return SignedPerm(std::move(v));
  }

  SignedPerm inverse() const {
    std::vector<int> v(images_.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
      const int img = images_[i];
      const int idx = static_cast<int>(i) + 1;
      v[std::abs(img) - 1] = img > 0 ? idx : -idx;
    }
    return SignedPerm(std::move(v));
  }

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(images_[i]);
    }
    return s + ')';
  }

  friend bool operator==(const SignedPerm&, const SignedPerm&) = default;
  friend auto operator<=>(const SignedPerm&, const SignedPerm&) = default;

 private:
  std::vector<int> images_;
};

// Statistics below take spans so enumeration loops can avoid allocations.

/// Pairs i < j with sigma(i) >_pm sigma(j); the ordinary inversion count on S_d.
inline unsigned inversions(std::span<const int> img) {
  unsigned n = 0;
  for (std::size_t i = 0; i < img.size(); ++i) {
    for (std::size_t j = i + 1; j < img.size(); ++j) n += pm_less(img[j], img[i]) ? 1 : 0;
  }
  return n;
}

inline unsigned sign_part(std::span<const int> img, Family f) {
  const int d = static_cast<int>(img.size());
  unsigned s = 0;
  for (int v : img) {
    if (v >= 0) continue;
    s += static_cast<unsigned>(f == Family::BC ? d + 1 + v : d + v);
  }
  return s;
}

/// Coxeter length: inversions plus the sign part sum_{sigma(i)<0} (d+1+sigma(i))
/// for BC, resp. (d+sigma(i)) for D.
inline unsigned length(std::span<const int> img, Family f) {
  if (f == Family::A) return inversions(img);
  return inversions(img) + sign_part(img, f);
}

/// Sum of positions i with sigma(i) > sigma(i+1) in the usual order, plus the
/// number of negative values. Equals maj on unsigned permutations.
inline unsigned wmaj(std::span<const int> img) {
  unsigned m = 0;
  for (std::size_t i = 0; i + 1 < img.size(); ++i) {
    if (img[i] > img[i + 1]) m += static_cast<unsigned>(i) + 1;
  }
  for (int v : img) m += v < 0 ? 1 : 0;
  return m;
}

/// [sigma(d) < 0] + #{i < d : sigma(i) >_pm sigma(i+1)}.
inline unsigned descent_count(std::span<const int> img) {
  if (img.empty()) return 0;
  unsigned b = img.back() < 0 ? 1 : 0;
  for (std::size_t i = 0; i + 1 < img.size(); ++i) b += pm_less(img[i + 1], img[i]) ? 1 : 0;
  return b;
}

inline unsigned inversions(const SignedPerm& s) { return inversions(s.images()); }
inline unsigned wmaj(const SignedPerm& s) { return wmaj(s.images()); }
inline unsigned maj(const SignedPerm& s) { return wmaj(s.images()); }
inline unsigned descent_count(const SignedPerm& s) { return descent_count(s.images()); }

inline unsigned length(const SignedPerm& s, const GroupFamily& fam) {
  if (s.rank() != fam.rank) throw std::invalid_argument("length: rank mismatch");
  if (!s.belongs_to(fam.tag)) {
    throw std::invalid_argument("length: " + s.to_string() + " is not in family " + family_name(fam.tag));
  }
  return length(s.images(), fam.tag);
}

/// Right multiplication sigma o s_i, in place. s_i = (i, i+1) for i < d; for
/// BC s_d negates d; for D s_d sends d-1 -> -d and d -> 1-d.
inline void apply_generator(std::span<int> img, Family f, unsigned i) {
  const std::size_t d = img.size();
  if (i == 0 || i > d) throw std::out_of_range("apply_generator: bad generator index");
  if (i < d) {
    std::swap(img[i - 1], img[i]);
    return;
  }
  switch (f) {
    case Family::A: throw std::out_of_range("apply_generator: type A has no generator s_d");
    case Family::BC: img[d - 1] = -img[d - 1]; return;
    case Family::D: {
      if (d < 2) throw std::out_of_range("apply_generator: D_1 has no generators");
      const int a = img[d - 2];
      const int b = img[d - 1];
      img[d - 2] = -b;
      img[d - 1] = -a;
      return;
    }
  }
}

inline SignedPerm times_generator(const SignedPerm& s, Family f, unsigned i) {
  std::vector<int> v(s.images().begin(), s.images().end());
  apply_generator(v, f, i);
  return SignedPerm(std::move(v));
}

inline SignedPerm generator(const GroupFamily& fam, unsigned i) {
  if (i == 0 || i > fam.generator_count()) throw std::out_of_range("generator: bad index");
  return times_generator(SignedPerm::identity(fam.rank), fam.tag, i);
}

namespace detail {

template <class F>
void enumerate_rec(std::vector<int>& img, std::vector<bool>& used, std::size_t pos, bool signs, F& f) {
  const int d = static_cast<int>(img.size());
  if (pos == img.size()) {
    f(std::span<const int>(img));
    return;
  }
  auto try_value = [&](int v) {
    const int a = std::abs(v);
    if (used[a]) return;
    used[a] = true;
    img[pos] = v;
    enumerate_rec(img, used, pos + 1, signs, f);
    used[a] = false;
  };
  if (signs) {
    for (int v = -d; v <= -1; ++v) try_value(v);
  }
  for (int v = 1; v <= d; ++v) try_value(v);
}

}  // namespace detail

/// Calls f(span of images) for every element, in lexicographic order of the
/// image array. The span is only valid during the call.
template <class F>
void for_each_element(const GroupFamily& fam, F&& f) {
  require_within_cap(fam.order(), "enumerate_group(" + family_name(fam.tag) + std::to_string(fam.rank) + ")");
  std::vector<int> img(fam.rank);
  std::vector<bool> used(fam.rank + 1, false);
  if (fam.tag == Family::D) {
    auto even_only = [&f](std::span<const int> s) {
      unsigned neg = 0;
      for (int v : s) neg += v < 0 ? 1 : 0;
      if (neg % 2 == 0) f(s);
    };
    detail::enumerate_rec(img, used, 0, true, even_only);
  } else {
    detail::enumerate_rec(img, used, 0, fam.tag == Family::BC, f);
  }
}

inline std::vector<SignedPerm> enumerate_group(const GroupFamily& fam) {
  std::vector<SignedPerm> out;
  out.reserve(fam.order());
  for_each_element(fam, [&](std::span<const int> s) { out.emplace_back(std::vector<int>(s.begin(), s.end())); });
  return out;
}

}  // namespace wm
