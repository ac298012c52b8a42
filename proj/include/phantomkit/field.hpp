#pragma once

#include <cstdint>

namespace phantomkit {

using Residue = std::uint32_t;

/// The prime field F_p. Products of two residues fit in 32 bits because p <= 46337.
class Field {
 public:
  static constexpr std::uint32_t kMaxPrime = 46337;

  explicit Field(std::uint32_t p);

  std::uint32_t p() const noexcept { return p_; }

  Residue add(Residue a, Residue b) const noexcept {
    Residue s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Residue sub(Residue a, Residue b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  Residue neg(Residue a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Residue mul(Residue a, Residue b) const noexcept { return (a * b) % p_; }
  Residue inv(Residue a) const;
  Residue reduce(std::int64_t v) const noexcept {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<Residue>(r < 0 ? r + p_ : r);
  }

  friend bool operator==(const Field&, const Field&) = default;

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint32_t n) noexcept;

}  // namespace phantomkit
