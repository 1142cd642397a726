#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "rhotensor/arith.hpp"

namespace rhotensor {

/// Largest supported rank. Exceptional types stop at 8; classical families
/// are capped here so weights stay inline.
inline constexpr std::size_t kMaxRank = 16;

/// Integral weight in the fundamental-weight basis (Bourbaki numbering).
///
/// Coordinates live inline so that weights can be hashed and copied cheaply in
/// the enumeration loops; unused slots are always zero. All arithmetic is
/// overflow checked.
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::size_t rank);
  Weight(std::initializer_list<std::int64_t> coords);
  explicit Weight(std::span<const std::int64_t> coords);

  std::size_t rank() const { return rank_; }
  std::int64_t operator[](std::size_t i) const { return c_[i]; }
  std::int64_t& operator[](std::size_t i) { return c_[i]; }

  const std::int64_t* begin() const { return c_.data(); }
  const std::int64_t* end() const { return c_.data() + rank_; }
  std::span<const std::int64_t> coords() const { return {c_.data(), rank_}; }

  bool is_dominant() const;
  bool is_zero() const;

  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  Weight& operator*=(std::int64_t k);
  Weight operator-() const;

  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(std::int64_t k, Weight a) { return a *= k; }

  friend bool operator==(const Weight&, const Weight&) = default;
  /// Lexicographic on coordinates.
  friend std::strong_ordering operator<=>(const Weight& a, const Weight& b);

  /// "2,0,1"
  std::string to_string() const;
  static Weight parse(const std::string& text);

  static Weight constant(std::size_t rank, std::int64_t value);

 private:
  std::array<std::int64_t, kMaxRank> c_{};
  std::uint8_t rank_ = 0;
};

struct WeightHash {
  std::size_t operator()(const Weight& w) const noexcept;
};

/// Rational weight in the fundamental-weight basis.
class WeightQ {
 public:
  WeightQ() = default;
  explicit WeightQ(std::size_t rank) : c_(rank) {}
  WeightQ(const Weight& w);  // NOLINT(google-explicit-constructor)
  explicit WeightQ(std::vector<Rational> coords) : c_(std::move(coords)) {}

  std::size_t rank() const { return c_.size(); }
  const Rational& operator[](std::size_t i) const { return c_[i]; }
  Rational& operator[](std::size_t i) { return c_[i]; }
  auto begin() const { return c_.begin(); }
  auto end() const { return c_.end(); }

  bool is_dominant() const;
  bool is_integral() const;
  /// Throws PreconditionViolated if any coordinate is fractional.
  Weight to_integral() const;

  WeightQ& operator+=(const WeightQ& o);
  WeightQ& operator-=(const WeightQ& o);
  WeightQ& operator*=(const Rational& k);
  WeightQ operator-() const;

  friend WeightQ operator+(WeightQ a, const WeightQ& b) { return a += b; }
  friend WeightQ operator-(WeightQ a, const WeightQ& b) { return a -= b; }
  friend WeightQ operator*(const Rational& k, WeightQ a) { return a *= k; }

  friend bool operator==(const WeightQ&, const WeightQ&) = default;

  std::string to_string() const;

 private:
  std::vector<Rational> c_;
};

/// Weyl group element as a word in the simple reflections. Letters are node
/// indices 1..r; the word (i1, ..., ik) denotes s_i1 * ... * s_ik, so the
/// rightmost letter acts first.
struct WeylWord {
  std::vector<int> letters;

  std::size_t length() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
  WeylWord inverse() const;
  friend WeylWord operator*(const WeylWord& a, const WeylWord& b);
  friend bool operator==(const WeylWord&, const WeylWord&) = default;
  std::string to_string() const;
};

/// Resource caps shared by the enumeration-heavy operations.
struct ComputeLimits {
  std::size_t max_lattice_points = 10'000'000;
  unsigned threads = 1;
  /// Enables E6/E7/E8 for enumeration-heavy campaigns.
  bool allow_heavy = false;
  /// Rank cap for operations that iterate over all 2^r node subsets.
  std::size_t max_subset_rank = 6;
  /// Rank cap for operations that enumerate Weyl group cosets.
  std::size_t max_coset_rank = 6;
};

}  // namespace rhotensor
