#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

#include "wm/signed_perm.hpp"

namespace wm {

/// Breadth-first distances from the identity in the Cayley graph of a family,
/// using right multiplication by its generators. Independent of length().
class CayleyDistances {
 public:
  static constexpr std::uint64_t kMaxOrder = 4'000'000;

  explicit CayleyDistances(const GroupFamily& fam) : fam_(fam) {
    if (fam.order() > kMaxOrder) {
      throw CapExceeded("CayleyDistances: group of order " + std::to_string(fam.order()) + " exceeds " +
                        std::to_string(kMaxOrder));
    }
    std::uint64_t fact = 1;
    for (unsigned i = 2; i <= fam.rank; ++i) fact *= i;
    signed_ = fam.tag != Family::A;
    table_.assign(fact << (signed_ ? fam.rank : 0), kUnreached);

    std::vector<int> img(fam.rank);
    const auto start = rank_of(SignedPerm::identity(fam.rank).images());
    table_[start] = 0;
    std::deque<std::uint32_t> queue{static_cast<std::uint32_t>(start)};
    while (!queue.empty()) {
      const auto r = queue.front();
      queue.pop_front();
      unrank(r, img);
      for (unsigned g = 1; g <= fam.generator_count(); ++g) {
        apply_generator(img, fam.tag, g);
        const auto n = rank_of(img);
        if (table_[n] == kUnreached) {
          table_[n] = static_cast<std::uint16_t>(table_[r] + 1);
          queue.push_back(static_cast<std::uint32_t>(n));
        }
        apply_generator(img, fam.tag, g);  // generators are involutions
      }
    }
  }

  const GroupFamily& family() const noexcept { return fam_; }

  /// Number of elements reached from the identity.
  std::uint64_t reached() const {
    return static_cast<std::uint64_t>(std::count_if(table_.begin(), table_.end(), [](auto v) { return v != kUnreached; }));
  }

  unsigned distance(const SignedPerm& s) const {
    if (s.rank() != fam_.rank || !s.belongs_to(fam_.tag)) {
      throw std::invalid_argument("coxeter_word_length: " + s.to_string() + " is not in " + family_name(fam_.tag) +
                                  std::to_string(fam_.rank));
    }
    const auto v = table_[rank_of(s.images())];
    if (v == kUnreached) throw std::logic_error("coxeter_word_length: element not reached by BFS");
    return v;
  }

 private:
  static constexpr std::uint16_t kUnreached = std::numeric_limits<std::uint16_t>::max();

  // Lehmer code of |sigma| in the factorial number system, then the sign mask.
  std::uint64_t rank_of(std::span<const int> img) const {
    const std::size_t d = img.size();
    std::uint64_t r = 0;
    for (std::size_t i = 0; i < d; ++i) {
      unsigned smaller = 0;
      for (std::size_t j = i + 1; j < d; ++j) smaller += std::abs(img[j]) < std::abs(img[i]) ? 1 : 0;
      r = r * (d - i) + smaller;
    }
    if (signed_) {
      std::uint64_t mask = 0;
      for (std::size_t i = 0; i < d; ++i) mask |= img[i] < 0 ? (std::uint64_t{1} << i) : 0;
      r = (r << d) | mask;
    }
    return r;
  }

  void unrank(std::uint64_t r, std::vector<int>& img) const {
    const std::size_t d = img.size();
    std::uint64_t mask = 0;
    if (signed_) {
      mask = r & ((std::uint64_t{1} << d) - 1);
      r >>= d;
    }
    std::vector<unsigned> code(d);
    for (std::size_t i = d; i-- > 0;) {
      code[i] = static_cast<unsigned>(r % (d - i));
      r /= (d - i);
    }
    std::vector<int> pool(d);
    for (std::size_t i = 0; i < d; ++i) pool[i] = static_cast<int>(i) + 1;
    for (std::size_t i = 0; i < d; ++i) {
      const int a = pool[code[i]];
      pool.erase(pool.begin() + code[i]);
      img[i] = (mask >> i) & 1U ? -a : a;
    }
  }

  GroupFamily fam_;
  bool signed_ = false;
  std::vector<std::uint16_t> table_;
};

inline unsigned coxeter_word_length(const SignedPerm& s, const GroupFamily& fam) {
  return CayleyDistances(fam).distance(s);
}

/// Reduced word found by repeatedly right-multiplying with the largest-index
/// generator that lowers the length. The product s_{w[0]} o s_{w[1]} o ... equals sigma.
inline std::vector<unsigned> greedy_reduced_word(const SignedPerm& s, const GroupFamily& fam) {
  std::vector<int> img(s.images().begin(), s.images().end());
  unsigned len = length(s, fam);
  std::vector<unsigned> steps;
  while (len > 0) {
    bool found = false;
    for (unsigned g = fam.generator_count(); g >= 1; --g) {
      apply_generator(img, fam.tag, g);
      const unsigned next = length(std::span<const int>(img), fam.tag);
      if (next < len) {
        steps.push_back(g);
        len = next;
        found = true;
        break;
      }
      apply_generator(img, fam.tag, g);
    }
    if (!found) throw std::logic_error("greedy_reduced_word: no generator lowers the length");
  }
  std::reverse(steps.begin(), steps.end());
  return steps;
}

/// s_{w[0]} o s_{w[1]} o ... as a signed permutation.
inline SignedPerm word_product(const std::vector<unsigned>& word, const GroupFamily& fam) {
  std::vector<int> img(fam.rank);
  for (unsigned i = 0; i < fam.rank; ++i) img[i] = static_cast<int>(i) + 1;
  for (unsigned g : word) apply_generator(img, fam.tag, g);
  return SignedPerm(std::move(img));
}

}  // namespace wm
