#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "grhom/hom.hpp"
#include "grhom/presentation.hpp"

namespace grhom {

/// Text of a `pmod <d> <p>` file. Blank lines and lines starting with '#' are ignored.
Presentation parse_pmod(std::string_view text);
/// Canonical form: one line per degree or relation, entries ascending, coefficients in [1, p).
std::string serialize_pmod(const Presentation& p);

/// firep text for d = 2: a chain complex whose middle homology is the module.
/// Entries are `i` (coefficient 1) or `i:c`.
Presentation parse_firep(std::string_view text, std::uint32_t field);

/// Chooses the parser from the first meaningful token. Only firep uses `field`;
/// a pmod header whose characteristic differs from a given field is an error.
Presentation parse_presentation(std::string_view text, std::optional<std::uint32_t> field = std::nullopt);

std::string serialize_hom_basis(const HomBasis& b, std::size_t d, std::uint32_t p);
/// Inverse of serialize_hom_basis; statistics are not stored and come back empty.
HomBasis parse_hom_basis(std::string_view text);

struct Betti {
  index b0 = 0;
  index b1 = 0;
};

struct BenchRecord {
  std::string instance;
  std::string algorithm;
  std::size_t variables = 0;
  std::size_t equations = 0;
  double avg_entries = 0.0;
  double seconds = 0.0;
  std::size_t dim = 0;
  index thickness_y = 0;
  index betti_thickness_y = 0;
  Betti x;
  Betti y;
};

BenchRecord make_record(std::string instance, const HomBasis& b, const Presentation& x, const Presentation& y);
std::string bench_csv_header();
std::string to_csv(const BenchRecord& r);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

}  // namespace grhom
