#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "grhom/graded_matrix.hpp"
#include "grhom/local_structure.hpp"
#include "grhom/presentation.hpp"

namespace grhom {

enum class Algorithm { direct, restricted, mixed, exact, restricted_dual, exact_dual, oracle };

/// CLI names: direct, a, mixed, b, a-star, b-star, oracle.
std::string_view to_string(Algorithm a);
std::optional<Algorithm> algorithm_from_string(std::string_view name);

enum class Coords { generators, cogenerators };
std::string_view to_string(Coords c);

struct SystemStats {
  std::size_t variables = 0;
  std::size_t equations = 0;
  std::size_t entries = 0;       ///< stored coefficients of the system
  std::size_t solutions = 0;     ///< dimension of the solution space before any quotient
  std::size_t homotopy_rank = 0; ///< rank of the null-homotopy block, when one is used
  double seconds = 0.0;

  double avg_entries_per_equation() const {
    return equations == 0 ? 0.0 : static_cast<double>(entries) / static_cast<double>(equations);
  }
};

/**
 * @brief Basis of Hom(X, Y) as graded matrices Q_j.
 *
 * In generator coordinates Q_j has rows G' (generators of Y) and columns G
 * (generators of X). In cogenerator coordinates rows and columns index the
 * cogenerators of Y and X respectively.
 */
struct HomBasis {
  std::vector<GradedMatrix> basis;
  Coords coords = Coords::generators;
  Algorithm algorithm = Algorithm::direct;
  SystemStats stats;

  std::size_t dim() const noexcept { return basis.size(); }
};

/// Admissible (row, column) pairs of Q and P. q[g] lists generators g' of Y,
/// p[r] lists relations r' of Y.
struct VariableMask {
  std::vector<std::vector<index>> q;
  std::vector<std::vector<index>> p;

  static VariableMask full(const Presentation& x, const Presentation& y);
};

/// QM - NP = 0 with one column per variable and one row per pair (g', r)
/// with deg g' <= deg r.
class LinearSystem {
 public:
  struct Variable {
    bool is_q;
    index row;  ///< g' for q, r' for p
    index col;  ///< g for q, r for p
  };

  static LinearSystem build(const Presentation& x, const Presentation& y, const VariableMask& mask);

  const std::vector<Variable>& variables() const noexcept { return variables_; }
  const std::vector<SparseColumn>& columns() const noexcept { return columns_; }
  std::size_t num_equations() const noexcept { return num_equations_; }
  SystemStats stats() const;

  /// Basis of the solution space, one vector over the variables each.
  std::vector<SparseColumn> solve() const;
  GradedMatrix q_part(const SparseColumn& solution) const;
  GradedMatrix p_part(const SparseColumn& solution) const;

 private:
  const Presentation* x_ = nullptr;
  const Presentation* y_ = nullptr;
  std::vector<Variable> variables_;
  std::vector<SparseColumn> columns_;
  std::size_t num_equations_ = 0;
};

/// Q-parts of a basis of all presentation morphisms (Q, P).
std::vector<GradedMatrix> presentation_morphisms(const Presentation& x, const Presentation& y,
                                                 SystemStats* stats = nullptr);

/// N-bar: Q flattened over positions (g', g) with deg g' <= deg g, one column
/// per (r', g) with deg r' <= deg g holding N_{., r'} in the g-block.
struct HomotopyMatrix {
  std::vector<std::vector<index>> position;  ///< position[g][g'] or -1
  index num_positions = 0;
  std::vector<SparseColumn> columns;

  SparseColumn flatten(const GradedMatrix& q) const;
};

HomotopyMatrix homotopy_matrix(std::span<const Degree> x_generators, const Presentation& y);

/// Reduces [N-bar | Q_1 ... Q_k] left to right and returns the reduced Q_j
/// that stay nonzero, in input order.
std::vector<GradedMatrix> homotopy_reduce(std::span<const GradedMatrix> qs, const Presentation& y,
                                          std::size_t* homotopy_rank = nullptr);

HomBasis hom_direct(const Presentation& x, const Presentation& y);
HomBasis hom_restricted(const Presentation& x, const Presentation& y);
HomBasis hom_mixed(const Presentation& x, const Presentation& y);
HomBasis hom_exact(const Presentation& x, const Presentation& y);

/// Dispatch for the primal and dual algorithms (not the oracle).
HomBasis hom(const Presentation& x, const Presentation& y, Algorithm algorithm);

/// True iff every column of QM lies in the image of N at its degree.
bool verify_hom(const GradedMatrix& q, const Presentation& x, const Presentation& y);

/// Presentation of the graded module Hom(X, Y), with Hom(X,Y)_a = Hom(X, Y[a]).
Presentation hom_module_presentation(const Presentation& x, const Presentation& y);

}  // namespace grhom
