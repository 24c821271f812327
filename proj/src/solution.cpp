#include "fairenum/solution.hpp"

#include <bit>
#include <stdexcept>

#include "fairenum/random.hpp"

namespace fairenum {

SolutionKey::SolutionKey(std::size_t n_bits)
    : n_bits_(n_bits), words_((n_bits + 63) / 64, 0) {}

SolutionKey SolutionKey::from_string(std::string_view bits) {
  SolutionKey key(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      key.set(i);
    } else if (bits[i] != '0') {
      throw std::invalid_argument("solution key must contain only '0' and '1'");
    }
  }
  return key;
}

SolutionKey SolutionKey::from_bools(const std::vector<bool>& bits) {
  SolutionKey key(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i]) key.set(i);
  }
  return key;
}

void SolutionKey::set(std::size_t i, bool value) {
  if (i >= n_bits_) throw std::out_of_range("solution key index out of range");
  const std::uint64_t mask = std::uint64_t{1} << (i % 64);
  if (value) {
    words_[i / 64] |= mask;
  } else {
    words_[i / 64] &= ~mask;
  }
}

std::size_t SolutionKey::count() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

std::string SolutionKey::to_string() const {
  std::string out(n_bits_, '0');
  for (std::size_t i = 0; i < n_bits_; ++i) {
    if (test(i)) out[i] = '1';
  }
  return out;
}

// Orders like the textual form: shorter keys first, then lexicographic on
// bit 0, bit 1, ...
std::strong_ordering operator<=>(const SolutionKey& a, const SolutionKey& b) {
  if (auto c = a.n_bits_ <=> b.n_bits_; c != 0) return c;
  for (std::size_t w = 0; w < a.words_.size(); ++w) {
    const std::uint64_t x = a.words_[w];
    const std::uint64_t y = b.words_[w];
    if (x == y) continue;
    // The lowest differing bit decides; '1' sorts after '0'.
    const std::uint64_t low = (x ^ y) & (~(x ^ y) + 1);
    return (x & low) ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return std::strong_ordering::equal;
}

std::size_t SolutionKeyHash::operator()(const SolutionKey& key) const noexcept {
  std::uint64_t h = splitmix64(key.size());
  for (auto w : key.words()) h = splitmix64(h ^ w);
  return static_cast<std::size_t>(h);
}

}  // namespace fairenum
