#include "grhom/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "grhom/errors.hpp"
#include "grhom/local_structure.hpp"
#include "grhom/presentation_ops.hpp"

namespace grhom {
namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

struct Line {
  std::size_t number;
  std::vector<Token> tokens;
};

// Splits into non-empty, non-comment lines of whitespace separated tokens.
// ';' is always a token of its own.
std::vector<Line> lex(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0, pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      char c = raw[i];
      if (c == ' ' || c == '\t' || c == '\r') { ++i; continue; }
      if (c == '#') break;
      if (c == ';') { line.tokens.push_back({raw.substr(i, 1), i + 1}); ++i; continue; }
      std::size_t j = i;
      while (j < raw.size() && raw[j] != ' ' && raw[j] != '\t' && raw[j] != '\r' && raw[j] != ';' && raw[j] != '#') ++j;
      line.tokens.push_back({raw.substr(i, j - i), i + 1});
      i = j;
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return lines;
}

[[noreturn]] void fail(ParseErrorKind kind, const Line& line, const Token& tok, const std::string& what) {
  throw ParseError(kind, line.number, tok.column, what);
}

[[noreturn]] void fail_at(ParseErrorKind kind, std::size_t line, std::size_t col, const std::string& what) {
  throw ParseError(kind, line, col, what);
}

long long to_int(const Line& line, const Token& tok) {
  long long v = 0;
  auto [p, ec] = std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), v);
  if (ec != std::errc() || p != tok.text.data() + tok.text.size()) {
    fail(ParseErrorKind::malformed, line, tok, "expected an integer, got '" + std::string(tok.text) + "'");
  }
  return v;
}

int to_coord(const Line& line, const Token& tok) {
  long long v = to_int(line, tok);
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max()) {
    fail(ParseErrorKind::malformed, line, tok, "degree coordinate out of range");
  }
  return static_cast<int>(v);
}

coeff to_coeff(const Line& line, const Token& tok, std::string_view text, const PrimeField& f) {
  Token t{text, tok.column};
  long long v = to_int(line, t);
  const long long p = f.characteristic();
  if (v == 0 || v >= p || v <= -p) {
    fail(ParseErrorKind::coeff_out_of_range, line, tok,
         "coefficient " + std::to_string(v) + " not a nonzero residue mod " + std::to_string(p));
  }
  return f.from_int(v);
}

class Cursor {
 public:
  explicit Cursor(std::vector<Line> lines) : lines_(std::move(lines)) {}
  bool done() const { return pos_ >= lines_.size(); }
  const Line& next(const char* expected) {
    if (done()) {
      std::size_t last = lines_.empty() ? 1 : lines_.back().number + 1;
      fail_at(ParseErrorKind::count_mismatch, last, 1, std::string("unexpected end of input, expected ") + expected);
    }
    return lines_[pos_++];
  }
  const Line& peek() const { return lines_[pos_]; }

 private:
  std::vector<Line> lines_;
  std::size_t pos_ = 0;
};

index expect_count(Cursor& cur, std::string_view keyword) {
  const Line& line = cur.next(std::string(keyword).c_str());
  if (line.tokens.size() != 2 || line.tokens[0].text != keyword) {
    fail(ParseErrorKind::count_mismatch, line, line.tokens[0],
         "expected '" + std::string(keyword) + " <count>'");
  }
  long long n = to_int(line, line.tokens[1]);
  if (n < 0) fail(ParseErrorKind::malformed, line, line.tokens[1], "negative count");
  return static_cast<index>(n);
}

Degree read_degree(const Line& line, std::size_t first, std::size_t count, std::size_t d) {
  if (count != d) {
    const Token& t = first < line.tokens.size() ? line.tokens[first] : line.tokens.back();
    fail(ParseErrorKind::bad_degree_arity, line, t,
         "expected " + std::to_string(d) + " coordinates, got " + std::to_string(count));
  }
  std::vector<int> c;
  for (std::size_t i = first; i < first + count; ++i) c.push_back(to_coord(line, line.tokens[i]));
  return Degree(std::move(c));
}

// gens/rels body shared by presentations and hom-basis matrices.
GradedMatrix read_body(Cursor& cur, std::size_t d, const PrimeField& f) {
  const index ng = expect_count(cur, "gens");
  std::vector<Degree> rows;
  for (index i = 0; i < ng; ++i) {
    const Line& line = cur.next("a generator degree");
    if (line.tokens[0].text == "rels") {
      fail(ParseErrorKind::count_mismatch, line, line.tokens[0],
           "found " + std::to_string(i) + " generators, header says " + std::to_string(ng));
    }
    rows.push_back(read_degree(line, 0, line.tokens.size(), d));
  }
  const index nr = expect_count(cur, "rels");
  std::vector<Degree> cols;
  std::vector<SparseColumn> columns;
  for (index j = 0; j < nr; ++j) {
    const Line& line = cur.next("a relation");
    std::size_t semi = 0;
    while (semi < line.tokens.size() && line.tokens[semi].text != ";") ++semi;
    if (semi == line.tokens.size()) {
      if (line.tokens[0].text == "matrix") {
        fail(ParseErrorKind::count_mismatch, line, line.tokens[0],
             "found " + std::to_string(j) + " relations, header says " + std::to_string(nr));
      }
      fail(ParseErrorKind::malformed, line, line.tokens.back(), "relation needs ';' after its degree");
    }
    Degree deg = read_degree(line, 0, semi, d);
    SparseColumn col;
    for (std::size_t t = semi + 1; t < line.tokens.size(); ++t) {
      const Token& tok = line.tokens[t];
      std::size_t colon = tok.text.find(':');
      if (colon == std::string_view::npos) fail(ParseErrorKind::malformed, line, tok, "entry must be row:coeff");
      long long row = to_int(line, Token{tok.text.substr(0, colon), tok.column});
      if (row < 0 || row >= ng) {
        fail(ParseErrorKind::row_out_of_range, line, tok, "row " + std::to_string(row) + " out of range");
      }
      if (!col.empty() && row <= col.back().row) {
        fail(ParseErrorKind::unsorted_rows, line, tok, "rows must be strictly ascending");
      }
      coeff v = to_coeff(line, tok, tok.text.substr(colon + 1), f);
      if (!leq(rows[row], deg)) {
        fail(ParseErrorKind::grading_violation, line, tok,
             "generator " + to_string(rows[row]) + " is not below relation " + to_string(deg));
      }
      col.push_back({static_cast<index>(row), v});
    }
    cols.push_back(std::move(deg));
    columns.push_back(std::move(col));
  }
  return GradedMatrix(f, d, std::move(rows), std::move(cols), std::move(columns));
}

void write_degree(std::ostringstream& out, const Degree& a) {
  for (std::size_t i = 0; i < a.dim(); ++i) out << (i ? " " : "") << a[i];
}

void write_body(std::ostringstream& out, const GradedMatrix& m) {
  out << "gens " << m.num_rows() << "\n";
  for (const auto& a : m.row_degrees()) {
    write_degree(out, a);
    out << "\n";
  }
  out << "rels " << m.num_cols() << "\n";
  for (index j = 0; j < m.num_cols(); ++j) {
    write_degree(out, m.col_degree(j));
    out << " ;";
    for (const auto& [r, v] : m.column(j)) out << " " << r << ":" << v;
    out << "\n";
  }
}

std::pair<std::size_t, PrimeField> read_header(const Line& line, std::string_view keyword) {
  if (line.tokens.size() != 3 || line.tokens[0].text != keyword) {
    fail(ParseErrorKind::bad_header, line, line.tokens[0], "expected '" + std::string(keyword) + " <d> <p>'");
  }
  long long d = to_int(line, line.tokens[1]);
  long long p = to_int(line, line.tokens[2]);
  if (d < 1 || d > 16) fail(ParseErrorKind::unsupported_dimension, line, line.tokens[1], "d must be in [1, 16]");
  if (p < 2 || p >= (1LL << 31) || !is_prime(static_cast<std::uint64_t>(p))) {
    fail(ParseErrorKind::bad_header, line, line.tokens[2], "characteristic must be a prime below 2^31");
  }
  return {static_cast<std::size_t>(d), PrimeField(static_cast<std::uint32_t>(p))};
}

}  // namespace

Presentation parse_pmod(std::string_view text) {
  Cursor cur(lex(text));
  if (cur.done()) fail_at(ParseErrorKind::bad_header, 1, 1, "empty input");
  auto [d, f] = read_header(cur.next("header"), "pmod");
  GradedMatrix m = read_body(cur, d, f);
  if (!cur.done()) {
    const Line& line = cur.peek();
    fail(ParseErrorKind::count_mismatch, line, line.tokens[0], "text after the last relation");
  }
  return Presentation(std::move(m));
}

std::string serialize_pmod(const Presentation& p) {
  std::ostringstream out;
  out << "pmod " << p.dim() << " " << p.field().characteristic() << "\n";
  write_body(out, p.matrix);
  return out.str();
}

namespace {

int to_grade(const Line& line, const Token& tok) {
  long long iv = 0;
  auto [ptr, ec] = std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), iv);
  if (ec == std::errc() && ptr == tok.text.data() + tok.text.size()) return to_coord(line, tok);
  char* end = nullptr;
  std::string s(tok.text);
  double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size()) fail(ParseErrorKind::malformed, line, tok, "expected a grade");
  if (v != std::floor(v) || std::abs(v) > 1e9) {
    fail(ParseErrorKind::non_integer_grade, line, tok, "grade '" + s + "' is not an integer");
  }
  return static_cast<int>(v);
}

struct FirepBlock {
  std::vector<Degree> degrees;
  std::vector<SparseColumn> columns;
};

FirepBlock read_firep_block(Cursor& cur, index count, index target, const PrimeField& f) {
  FirepBlock b;
  for (index j = 0; j < count; ++j) {
    const Line& line = cur.next("a firep row");
    std::size_t semi = 0;
    while (semi < line.tokens.size() && line.tokens[semi].text != ";") ++semi;
    if (semi == line.tokens.size()) fail(ParseErrorKind::malformed, line, line.tokens.back(), "row needs ';'");
    if (semi != 2) {
      fail(ParseErrorKind::bad_degree_arity, line, line.tokens[0], "firep grades have two coordinates");
    }
    b.degrees.emplace_back(std::vector<int>{to_grade(line, line.tokens[0]), to_grade(line, line.tokens[1])});
    std::vector<Entry> entries;
    for (std::size_t t = semi + 1; t < line.tokens.size(); ++t) {
      const Token& tok = line.tokens[t];
      std::size_t colon = tok.text.find(':');
      long long row = to_int(line, Token{tok.text.substr(0, colon), tok.column});
      if (row < 0 || row >= target) fail(ParseErrorKind::row_out_of_range, line, tok, "index out of range");
      coeff v = colon == std::string_view::npos ? 1 : to_coeff(line, tok, tok.text.substr(colon + 1), f);
      entries.push_back({static_cast<index>(row), v});
    }
    b.columns.push_back(make_column(std::move(entries), f));
  }
  return b;
}

}  // namespace

Presentation parse_firep(std::string_view text, std::uint32_t field) {
  PrimeField f(field);
  Cursor cur(lex(text));
  if (cur.done()) fail_at(ParseErrorKind::bad_header, 1, 1, "empty input");
  const Line& head = cur.next("firep header");
  if (head.tokens[0].text != "firep") fail(ParseErrorKind::bad_header, head, head.tokens[0], "expected 'firep'");
  cur.next("x label");
  cur.next("y label");
  const Line& counts = cur.next("counts");
  if (counts.tokens.size() != 3) fail(ParseErrorKind::bad_header, counts, counts.tokens[0], "expected 't s r'");
  const long long t = to_int(counts, counts.tokens[0]);
  const long long s = to_int(counts, counts.tokens[1]);
  const long long r = to_int(counts, counts.tokens[2]);
  if (t < 0 || s < 0 || r < 0) fail(ParseErrorKind::malformed, counts, counts.tokens[0], "negative count");

  FirepBlock high = read_firep_block(cur, static_cast<index>(t), static_cast<index>(s), f);
  FirepBlock mid = read_firep_block(cur, static_cast<index>(s), static_cast<index>(r), f);
  if (!cur.done()) {
    const Line& line = cur.peek();
    fail(ParseErrorKind::count_mismatch, line, line.tokens[0], "more rows than the counts line declares");
  }
  std::vector<Degree> low_degrees;
  // Low generators carry no grades in firep; placing them at the meet of the
  // columns that use them keeps the low map graded without changing its kernel.
  std::vector<std::optional<Degree>> low(r);
  for (std::size_t j = 0; j < mid.columns.size(); ++j) {
    for (const auto& e : mid.columns[j]) low[e.row] = low[e.row] ? meet(*low[e.row], mid.degrees[j]) : mid.degrees[j];
  }
  for (auto& a : low) low_degrees.push_back(a ? *a : Degree::zero(2));
  GradedMatrix lower(f, 2, low_degrees, mid.degrees, mid.columns);

  for (std::size_t j = 0; j < high.columns.size(); ++j) {
    for (const auto& e : high.columns[j]) {
      if (!leq(mid.degrees[e.row], high.degrees[j])) {
        fail_at(ParseErrorKind::grading_violation, 0, 1, "high column " + std::to_string(j) + " is not graded");
      }
    }
  }
  GradedMatrix k = kernel(lower);
  // Each high column is a cycle, so it is a combination of kernel generators below its grade.
  std::vector<SparseColumn> rels;
  for (std::size_t j = 0; j < high.columns.size(); ++j) {
    std::vector<index> below;
    ColumnEchelon echelon(f, static_cast<index>(s), true);
    for (index c = 0; c < k.num_cols(); ++c) {
      if (leq(k.col_degree(c), high.degrees[j])) {
        below.push_back(c);
        echelon.insert(k.column(c));
      }
    }
    SparseColumn v = high.columns[j];
    SparseColumn log;
    echelon.reduce(v, &log);
    if (!v.empty()) throw ParseError(ParseErrorKind::malformed, 0, 1, "firep high map is not a cycle");
    std::vector<Entry> entries;
    for (const auto& [pos, c] : log) entries.push_back({below[pos], f.neg(c)});
    rels.push_back(make_column(std::move(entries), f));
  }
  GradedMatrix pres(f, 2, k.col_degrees(), high.degrees, std::move(rels));
  return minimize(Presentation(std::move(pres)));
}

Presentation parse_presentation(std::string_view text, std::optional<std::uint32_t> field) {
  auto lines = lex(text);
  if (!lines.empty() && lines.front().tokens[0].text == "firep") return parse_firep(text, field.value_or(2));
  Presentation p = parse_pmod(text);
  if (field && p.field().characteristic() != *field) {
    throw FieldError("file is over GF(" + std::to_string(p.field().characteristic()) + "), --field asks for GF(" +
                     std::to_string(*field) + ")");
  }
  return p;
}

std::string serialize_hom_basis(const HomBasis& b, std::size_t d, std::uint32_t p) {
  std::ostringstream out;
  out << "homs " << d << " " << p << "\n";
  out << "dim " << b.dim() << "\n";
  out << "coords " << to_string(b.coords) << "\n";
  out << "alg " << to_string(b.algorithm) << "\n";
  for (std::size_t j = 0; j < b.basis.size(); ++j) {
    out << "matrix " << j << "\n";
    write_body(out, b.basis[j]);
  }
  return out.str();
}

HomBasis parse_hom_basis(std::string_view text) {
  Cursor cur(lex(text));
  if (cur.done()) fail_at(ParseErrorKind::bad_header, 1, 1, "empty input");
  auto [d, f] = read_header(cur.next("header"), "homs");
  const index k = expect_count(cur, "dim");
  HomBasis b;
  const Line& coords = cur.next("coords");
  if (coords.tokens.size() != 2 || coords.tokens[0].text != "coords" ||
      (coords.tokens[1].text != "generators" && coords.tokens[1].text != "cogenerators")) {
    fail(ParseErrorKind::malformed, coords, coords.tokens[0], "expected 'coords generators|cogenerators'");
  }
  b.coords = coords.tokens[1].text == "generators" ? Coords::generators : Coords::cogenerators;
  const Line& alg = cur.next("alg");
  std::optional<Algorithm> a;
  if (alg.tokens.size() == 2 && alg.tokens[0].text == "alg") a = algorithm_from_string(alg.tokens[1].text);
  if (!a) fail(ParseErrorKind::malformed, alg, alg.tokens[0], "expected 'alg <name>'");
  b.algorithm = *a;
  for (index j = 0; j < k; ++j) {
    const Line& head = cur.next("matrix");
    if (head.tokens.size() != 2 || head.tokens[0].text != "matrix" || to_int(head, head.tokens[1]) != j) {
      fail(ParseErrorKind::count_mismatch, head, head.tokens[0], "expected 'matrix " + std::to_string(j) + "'");
    }
    b.basis.push_back(read_body(cur, d, f));
  }
  if (!cur.done()) {
    const Line& line = cur.peek();
    fail(ParseErrorKind::count_mismatch, line, line.tokens[0], "more matrices than 'dim' declares");
  }
  return b;
}

BenchRecord make_record(std::string instance, const HomBasis& b, const Presentation& x, const Presentation& y) {
  BenchRecord r;
  r.instance = std::move(instance);
  r.algorithm = std::string(to_string(b.algorithm));
  r.variables = b.stats.variables;
  r.equations = b.stats.equations;
  r.avg_entries = b.stats.avg_entries_per_equation();
  r.seconds = b.stats.seconds;
  r.dim = b.dim();
  r.thickness_y = thickness(y);
  r.betti_thickness_y = betti_restricted_thickness(x, y);
  r.x = {x.num_generators(), x.num_relations()};
  r.y = {y.num_generators(), y.num_relations()};
  return r;
}

std::string bench_csv_header() {
  return "instance,algorithm,variables,equations,avg_entries,seconds,dim,thickness_y,betti_thickness_y,b0_x,b1_x,b0_y,b1_y\n";
}

std::string to_csv(const BenchRecord& r) {
  char avg[32], sec[32];
  std::snprintf(avg, sizeof avg, "%.4f", r.avg_entries);
  std::snprintf(sec, sizeof sec, "%.6f", r.seconds);
  std::ostringstream out;
  out << r.instance << "," << r.algorithm << "," << r.variables << "," << r.equations << "," << avg << "," << sec
      << "," << r.dim << "," << r.thickness_y << "," << r.betti_thickness_y << "," << r.x.b0 << "," << r.x.b1 << ","
      << r.y.b0 << "," << r.y.b1 << "\n";
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FileError("cannot write '" + path + "'");
  out << content;
  if (!out) throw FileError("write to '" + path + "' failed");
}

}  // namespace grhom
