// Open-addressing map from word codes to visit steps, used by the
// single-orbit walkers. Grows geometrically; memory tracks orbit length.
#pragma once

#include <cstdint>
#include <vector>

namespace jpca {

class VisitMap {
 public:
  static constexpr std::uint64_t kAbsent = ~std::uint64_t{0};

  VisitMap() { rehash(1024); }

  // Inserts key -> step if absent and returns kAbsent; otherwise returns
  // the stored step and leaves the map unchanged.
  std::uint64_t insert(std::uint64_t key, std::uint64_t step) {
    if ((size_ + 1) * 10 >= capacity_ * 7) rehash(capacity_ * 2);
    size_t i = slot(key);
    while (keys_[i] != kEmpty) {
      if (keys_[i] == key) return steps_[i];
      i = (i + 1) & (capacity_ - 1);
    }
    keys_[i] = key;
    steps_[i] = step;
    ++size_;
    return kAbsent;
  }

  std::uint64_t size() const { return size_; }

 private:
  // codes are < 2^63, so all-ones never collides with a real key
  static constexpr std::uint64_t kEmpty = ~std::uint64_t{0};

  size_t slot(std::uint64_t key) const {
    std::uint64_t h = key * 0x9E3779B97F4A7C15ull;
    h ^= h >> 29;
    return static_cast<size_t>(h & (capacity_ - 1));
  }

  void rehash(std::uint64_t new_capacity) {
    std::vector<std::uint64_t> old_keys = std::move(keys_);
    std::vector<std::uint64_t> old_steps = std::move(steps_);
    capacity_ = new_capacity;
    keys_.assign(capacity_, kEmpty);
    steps_.assign(capacity_, 0);
    for (size_t i = 0; i < old_keys.size(); ++i) {
      if (old_keys[i] == kEmpty) continue;
      size_t j = slot(old_keys[i]);
      while (keys_[j] != kEmpty) j = (j + 1) & (capacity_ - 1);
      keys_[j] = old_keys[i];
      steps_[j] = old_steps[i];
    }
  }

  std::uint64_t capacity_ = 0;
  std::uint64_t size_ = 0;
  std::vector<std::uint64_t> keys_;
  std::vector<std::uint64_t> steps_;
};

}  // namespace jpca
