#include "grhom/degree.hpp"

#include <algorithm>
#include <limits>

#include "grhom/errors.hpp"

namespace grhom {

namespace {

void require_same_dim(const Degree& a, const Degree& b) {
  if (a.dim() != b.dim()) {
    throw DimensionMismatch("comparing degrees of dimension " + std::to_string(a.dim()) +
                            " and " + std::to_string(b.dim()));
  }
}

int checked(long long v) {
  if (v > std::numeric_limits<int>::max() || v < std::numeric_limits<int>::min()) {
    throw OverflowError("degree coordinate out of range: " + std::to_string(v));
  }
  return static_cast<int>(v);
}

}  // namespace

Degree Degree::with(std::size_t i, int value) const {
  std::vector<int> c = coords_;
  c.at(i) = value;
  return Degree(std::move(c));
}

bool leq(const Degree& a, const Degree& b) {
  require_same_dim(a, b);
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

bool lt(const Degree& a, const Degree& b) { return leq(a, b) && a != b; }

Degree join(const Degree& a, const Degree& b) {
  require_same_dim(a, b);
  std::vector<int> c(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) c[i] = std::max(a[i], b[i]);
  return Degree(std::move(c));
}

Degree meet(const Degree& a, const Degree& b) {
  require_same_dim(a, b);
  std::vector<int> c(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) c[i] = std::min(a[i], b[i]);
  return Degree(std::move(c));
}

Degree operator+(const Degree& a, const Degree& b) {
  require_same_dim(a, b);
  std::vector<int> c(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) c[i] = checked(static_cast<long long>(a[i]) + b[i]);
  return Degree(std::move(c));
}

Degree operator-(const Degree& a, const Degree& b) {
  require_same_dim(a, b);
  std::vector<int> c(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) c[i] = checked(static_cast<long long>(a[i]) - b[i]);
  return Degree(std::move(c));
}

Degree operator-(const Degree& a) {
  std::vector<int> c(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) c[i] = checked(-static_cast<long long>(a[i]));
  return Degree(std::move(c));
}

Degree join_all(std::span<const Degree> degrees) {
  if (degrees.empty()) throw PreconditionError("join of an empty set of degrees");
  Degree result = degrees.front();
  for (const auto& g : degrees.subspan(1)) result = join(result, g);
  return result;
}

std::string to_string(const Degree& a) {
  std::string s = "(";
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (i) s += ",";
    s += std::to_string(a[i]);
  }
  return s + ")";
}

}  // namespace grhom
