#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace fairenum {

// Canonical fixed-length bit string identifying a solution. Bit i is the i-th
// decision variable; the textual form lists bit 0 first.
class SolutionKey {
 public:
  SolutionKey() = default;
  explicit SolutionKey(std::size_t n_bits);
  static SolutionKey from_string(std::string_view bits);
  static SolutionKey from_bools(const std::vector<bool>& bits);

  std::size_t size() const { return n_bits_; }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
  void set(std::size_t i, bool value = true);
  std::size_t count() const;

  std::string to_string() const;
  const std::vector<std::uint64_t>& words() const { return words_; }

  friend bool operator==(const SolutionKey&, const SolutionKey&) = default;
  friend std::strong_ordering operator<=>(const SolutionKey& a, const SolutionKey& b);

 private:
  std::size_t n_bits_ = 0;
  std::vector<std::uint64_t> words_;
};

struct SolutionKeyHash {
  std::size_t operator()(const SolutionKey& key) const noexcept;
};

// A feasible solution x together with its cost f(x). Identity is the key.
struct Solution {
  SolutionKey key;
  double cost = 0.0;

  friend bool operator==(const Solution& a, const Solution& b) { return a.key == b.key; }
};

}  // namespace fairenum
