#ifndef KIRBY_F2_HPP
#define KIRBY_F2_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace kirby {

/// Vector over the two-element field, one byte per bit.
struct F2Vector {
  std::vector<std::uint8_t> bits;

  F2Vector() = default;
  explicit F2Vector(std::size_t n) : bits(n, 0) {}

  std::size_t size() const { return bits.size(); }
  std::uint8_t operator[](std::size_t i) const { return bits[i]; }
  std::uint8_t& operator[](std::size_t i) { return bits[i]; }

  F2Vector operator+(const F2Vector& rhs) const;
  bool is_zero() const;
  bool operator==(const F2Vector&) const = default;
};

/// Dense matrix over the two-element field.
struct F2Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::uint8_t> bits;  // row-major

  F2Matrix() = default;
  F2Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), bits(r * c, 0) {}

  std::uint8_t at(std::size_t r, std::size_t c) const {
    return bits[r * cols + c];
  }
  void set(std::size_t r, std::size_t c, std::uint8_t v) {
    bits[r * cols + c] = v & 1;
  }

  F2Vector column(std::size_t c) const;
  F2Vector apply(const F2Vector& x) const;

  bool operator==(const F2Matrix&) const = default;
};

std::size_t f2_rank(const F2Matrix& m);

/// Solves m * x = b by Gaussian elimination; returns one solution or
/// nullopt when b is outside the column space.  Throws
/// MalformedInputError if dimensions disagree.
std::optional<F2Vector> f2_solve(const F2Matrix& m, const F2Vector& b);

}  // namespace kirby

#endif  // KIRBY_F2_HPP
