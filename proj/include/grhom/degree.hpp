#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace grhom {

/**
 * @brief A point of Z^d ordered coordinate-wise.
 *
 * The total order given by operator<=> is lexicographic and only used for
 * containers and sorting; it is a linear extension of the partial order.
 * Partial-order queries go through leq/lt/join which reject mismatched d.
 */
class Degree {
 public:
  Degree() = default;
  explicit Degree(std::vector<int> coords) : coords_(std::move(coords)) {}
  Degree(std::initializer_list<int> coords) : coords_(coords) {}

  static Degree zero(std::size_t d) { return Degree(std::vector<int>(d, 0)); }
  static Degree ones(std::size_t d) { return Degree(std::vector<int>(d, 1)); }

  std::size_t dim() const noexcept { return coords_.size(); }
  int operator[](std::size_t i) const { return coords_[i]; }
  std::span<const int> coords() const noexcept { return coords_; }

  /// Copy with coordinate i replaced.
  Degree with(std::size_t i, int value) const;

  bool operator==(const Degree&) const = default;
  auto operator<=>(const Degree&) const = default;

 private:
  std::vector<int> coords_;
};

/// Coordinate-wise a <= b. Throws DimensionMismatch on different d.
bool leq(const Degree& a, const Degree& b);
/// a <= b and a != b.
bool lt(const Degree& a, const Degree& b);
Degree join(const Degree& a, const Degree& b);
Degree meet(const Degree& a, const Degree& b);

/// Checked coordinate-wise arithmetic; throws OverflowError.
Degree operator+(const Degree& a, const Degree& b);
Degree operator-(const Degree& a, const Degree& b);
Degree operator-(const Degree& a);

/// Join over a non-empty range; throws PreconditionError when empty.
Degree join_all(std::span<const Degree> degrees);

std::string to_string(const Degree& a);

}  // namespace grhom
