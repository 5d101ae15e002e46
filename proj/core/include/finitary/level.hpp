#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace finitary {

// An exact dyadic distance 2^(-k), or 0 (the infinite level).
// Level k < Level j means the *distance* 2^(-k) is larger, i.e. the sets
// separate earlier. All metric arithmetic in this library is done on
// levels; no floating point is involved anywhere.
class Level {
 public:
  static constexpr Level infinite() { return Level(kInf); }
  static constexpr Level at(uint32_t k) { return Level(k); }

  constexpr bool is_infinite() const { return k_ == kInf; }

  // The exponent k of the distance 2^(-k). Finite levels only.
  constexpr uint32_t index() const { return k_; }

  // The next level down in distance (half the distance); fixes infinity.
  constexpr Level succ() const { return is_infinite() ? *this : Level(k_ + 1); }

  friend constexpr bool operator==(Level, Level) = default;
  friend constexpr std::strong_ordering operator<=>(Level a, Level b) {
    return a.k_ <=> b.k_;  // kInf is the largest representable value
  }

  // Exact fraction rendering: "0" for infinity, else "1", "1/2", "1/4", ...
  std::string to_fraction() const {
    if (is_infinite()) return "0";
    if (k_ == 0) return "1";
    if (k_ <= 62) return "1/" + std::to_string(uint64_t{1} << k_);
    return "1/2^" + std::to_string(k_);
  }

 private:
  static constexpr uint32_t kInf = 0xffffffffu;
  explicit constexpr Level(uint32_t k) : k_(k) {}
  uint32_t k_;
};

}  // namespace finitary
