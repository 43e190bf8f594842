#include "grhom/sparse.hpp"

#include <algorithm>

namespace grhom {

void axpy(SparseColumn& target, coeff scale, const SparseColumn& source,
          const PrimeField& field) {
  if (scale == 0 || source.empty()) return;
  SparseColumn out;
  out.reserve(target.size() + source.size());
  auto a = target.begin();
  auto b = source.begin();
  while (a != target.end() || b != source.end()) {
    if (b == source.end() || (a != target.end() && a->row < b->row)) {
      out.push_back(*a++);
    } else if (a == target.end() || b->row < a->row) {
      out.push_back({b->row, field.mul(scale, b->value)});
      ++b;
    } else {
      coeff v = field.add(a->value, field.mul(scale, b->value));
      if (v != 0) out.push_back({a->row, v});
      ++a;
      ++b;
    }
  }
  target = std::move(out);
}

void scale_column(SparseColumn& column, coeff scale, const PrimeField& field) {
  if (scale == 0) {
    column.clear();
    return;
  }
  for (auto& e : column) e.value = field.mul(e.value, scale);
}

coeff value_at(const SparseColumn& column, index row) {
  auto it = std::lower_bound(column.begin(), column.end(), row,
                             [](const Entry& e, index r) { return e.row < r; });
  return (it != column.end() && it->row == row) ? it->value : 0;
}

bool is_canonical(const SparseColumn& column, const PrimeField& field) {
  for (std::size_t k = 0; k < column.size(); ++k) {
    if (column[k].value == 0 || column[k].value >= field.characteristic()) return false;
    if (column[k].row < 0) return false;
    if (k > 0 && column[k - 1].row >= column[k].row) return false;
  }
  return true;
}

SparseColumn make_column(std::vector<Entry> entries, const PrimeField& field) {
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.row < b.row; });
  SparseColumn out;
  for (const auto& e : entries) {
    coeff v = e.value % field.characteristic();
    if (!out.empty() && out.back().row == e.row) {
      out.back().value = field.add(out.back().value, v);
      if (out.back().value == 0) out.pop_back();
    } else if (v != 0) {
      out.push_back({e.row, v});
    }
  }
  return out;
}

ColumnEchelon::ColumnEchelon(PrimeField field, index num_rows, bool record)
    : field_(field), num_rows_(num_rows), record_(record), pivot_owner_(num_rows, -1) {}

void ColumnEchelon::reduce(SparseColumn& v, SparseColumn* log) const {
  while (!v.empty()) {
    const index p = v.back().row;
    const index owner = pivot_owner_[p];
    if (owner < 0) return;
    const SparseColumn& c = reduced_[owner];
    const coeff factor = field_.neg(field_.div(v.back().value, c.back().value));
    axpy(v, factor, c, field_);
    if (log && record_) axpy(*log, factor, log_[owner], field_);
  }
}

bool ColumnEchelon::insert(SparseColumn v) {
  const index j = static_cast<index>(reduced_.size());
  SparseColumn lg;
  if (record_) {
    lg.push_back({j, 1});
    reduce(v, &lg);
  } else {
    reduce(v);
  }
  const bool independent = !v.empty();
  if (independent) {
    pivot_owner_[v.back().row] = j;
    pivot_columns_.push_back(j);
  }
  reduced_.push_back(std::move(v));
  if (record_) log_.push_back(std::move(lg));
  return independent;
}

bool ColumnEchelon::contains(SparseColumn v) const {
  reduce(v);
  return v.empty();
}

std::vector<index> ColumnSpan::zero_columns() const {
  std::vector<index> out;
  for (index j = 0; j < static_cast<index>(reduced.size()); ++j) {
    if (reduced[j].empty()) out.push_back(j);
  }
  return out;
}

std::vector<index> ColumnSpan::nonzero_columns() const {
  std::vector<index> out;
  for (index j = 0; j < static_cast<index>(reduced.size()); ++j) {
    if (!reduced[j].empty()) out.push_back(j);
  }
  return out;
}

ColumnSpan column_reduce(std::span<const SparseColumn> columns, index num_rows,
                         const PrimeField& field, bool record) {
  ColumnEchelon echelon(field, num_rows, record);
  for (const auto& c : columns) echelon.insert(c);
  ColumnSpan span;
  span.reduced = echelon.reduced();
  span.pivot_owner = echelon.pivot_owner();
  span.log = echelon.log();
  span.rank = echelon.rank();
  return span;
}

std::vector<SparseColumn> nullspace(std::span<const SparseColumn> columns, index num_rows,
                                    const PrimeField& field) {
  ColumnEchelon echelon(field, num_rows, true);
  for (const auto& c : columns) echelon.insert(c);
  std::vector<SparseColumn> out;
  for (std::size_t j = 0; j < echelon.reduced().size(); ++j) {
    if (echelon.reduced()[j].empty()) out.push_back(echelon.log()[j]);
  }
  return out;
}

}  // namespace grhom
