#include "qpea/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

namespace qpea {
namespace {

[[noreturn]] void fail(std::string_view source, std::size_t line, const std::string& what) {
  throw IoError(std::string(source) + ":" + std::to_string(line) + ": " + what);
}

std::string format_value(double v) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", v);
  return buffer;
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  return out;
}

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string() + " for reading");
  return in;
}

}  // namespace

SymmetricMatrix parse_matrix(std::istream& in, std::string_view source) {
  std::string line;
  std::size_t line_no = 1;
  if (!std::getline(in, line)) fail(source, line_no, "missing header");

  std::istringstream header(line);
  std::string magic;
  long long order = 0, nnz = 0;
  if (!(header >> magic >> order >> nnz) || magic != "symm-v1")
    fail(source, line_no, "malformed header, expected `symm-v1 N NNZ`");
  if (order < 1) fail(source, line_no, "order must be >= 1");
  if (nnz < 0) fail(source, line_no, "entry count must be >= 0");

  SymmetricMatrix m(static_cast<Eigen::Index>(order));
  std::vector<char> seen(static_cast<std::size_t>(order * order), 0);
  for (long long e = 0; e < nnz; ++e) {
    ++line_no;
    if (!std::getline(in, line)) fail(source, line_no, "unexpected end of file");
    std::istringstream entry(line);
    long long i = 0, j = 0;
    double value = 0.0;
    if (!(entry >> i >> j >> value)) fail(source, line_no, "malformed entry line");
    if (i < 0 || j < 0 || i >= order || j >= order)
      fail(source, line_no, "index out of range");
    if (j < i) fail(source, line_no, "lower-triangle entry rejected");
    if (!std::isfinite(value)) fail(source, line_no, "non-finite value rejected");
    auto& slot = seen[static_cast<std::size_t>(i * order + j)];
    if (slot) fail(source, line_no, "duplicate entry rejected");
    slot = 1;
    m.set(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j), value);
  }
  return m;
}

SymmetricMatrix read_matrix(const std::filesystem::path& path) {
  auto in = open_in(path);
  return parse_matrix(in, path.string());
}

void write_matrix(const SymmetricMatrix& m, std::ostream& out) {
  long long nnz = 0;
  for (Eigen::Index j = 0; j < m.order(); ++j)
    for (Eigen::Index i = 0; i <= j; ++i)
      if (m(i, j) != 0.0) ++nnz;

  out << "symm-v1 " << m.order() << ' ' << nnz << '\n';
  for (Eigen::Index i = 0; i < m.order(); ++i)
    for (Eigen::Index j = i; j < m.order(); ++j)
      if (m(i, j) != 0.0)
        out << i << ' ' << j << ' ' << format_value(m(i, j)) << '\n';
}

void write_matrix(const SymmetricMatrix& m, const std::filesystem::path& path) {
  auto out = open_out(path);
  write_matrix(m, out);
}

LocalHamiltonianSpec parse_lham(std::istream& in, std::string_view source) {
  std::string line;
  std::size_t line_no = 1;
  if (!std::getline(in, line)) fail(source, line_no, "missing header");

  std::istringstream header(line);
  std::string magic, model;
  int qubits = 0;
  if (!(header >> magic >> qubits >> model) || magic != "lham-v1")
    fail(source, line_no, "malformed header, expected `lham-v1 n model`");
  if (qubits < 1) fail(source, line_no, "qubit count must be >= 1");
  if (model != "H1" && model != "H2") fail(source, line_no, "model must be H1 or H2");

  LocalHamiltonianSpec spec;
  spec.qubit_count = qubits;
  spec.model = model == "H1" ? LocalModel::H1 : LocalModel::H2;

  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream entry(line);
    std::string kind, mask_hex;
    double coeff = 0.0;
    if (!(entry >> kind >> mask_hex >> coeff)) fail(source, line_no, "malformed term line");
    if (!std::isfinite(coeff)) fail(source, line_no, "non-finite coefficient rejected");
    std::uint64_t mask = 0;
    try {
      std::size_t used = 0;
      mask = std::stoull(mask_hex, &used, 16);
      if (used != mask_hex.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      fail(source, line_no, "malformed hex mask `" + mask_hex + "`");
    }
    if (kind == "X")
      spec.add_x(mask, coeff);
    else if (kind == "Z")
      spec.add_z(mask, coeff);
    else
      fail(source, line_no, "term kind must be X or Z");
  }
  try {
    spec.validate();
  } catch (const ValidationError& err) {
    throw IoError(std::string(source) + ": " + err.what());
  }
  return spec;
}

LocalHamiltonianSpec read_lham(const std::filesystem::path& path) {
  auto in = open_in(path);
  return parse_lham(in, path.string());
}

void write_lham(const LocalHamiltonianSpec& spec, std::ostream& out) {
  spec.validate();
  out << "lham-v1 " << spec.qubit_count << ' '
      << (spec.model == LocalModel::H1 ? "H1" : "H2") << '\n';
  char mask_hex[32];
  for (const auto& t : spec.x_terms) {
    std::snprintf(mask_hex, sizeof(mask_hex), "%llx",
                  static_cast<unsigned long long>(t.mask));
    out << "X " << mask_hex << ' ' << format_value(t.coeff) << '\n';
  }
  for (const auto& t : spec.z_terms) {
    std::snprintf(mask_hex, sizeof(mask_hex), "%llx",
                  static_cast<unsigned long long>(t.mask));
    out << "Z " << mask_hex << ' ' << format_value(t.coeff) << '\n';
  }
}

void write_lham(const LocalHamiltonianSpec& spec, const std::filesystem::path& path) {
  auto out = open_out(path);
  write_lham(spec, out);
}

}  // namespace qpea
