#pragma once

#include <filesystem>
#include <iosfwd>
#include <string_view>

#include "qpea/generators.hpp"
#include "qpea/matrix.hpp"

namespace qpea {

// "symm-v1" text format: header `symm-v1 N NNZ`, then NNZ lines
// `i j value` with 0-based indices restricted to the upper triangle
// (including the diagonal). Values are written with 17 significant digits
// so write -> read is the identity.
SymmetricMatrix parse_matrix(std::istream& in, std::string_view source = "<stream>");
SymmetricMatrix read_matrix(const std::filesystem::path& path);
void write_matrix(const SymmetricMatrix& m, std::ostream& out);
void write_matrix(const SymmetricMatrix& m, const std::filesystem::path& path);

// "lham-v1" text format: header `lham-v1 n model`, then lines
// `X <mask-hex> <K>` and `Z <mask-hex> <J>`. Repeated strings are merged.
LocalHamiltonianSpec parse_lham(std::istream& in, std::string_view source = "<stream>");
LocalHamiltonianSpec read_lham(const std::filesystem::path& path);
void write_lham(const LocalHamiltonianSpec& spec, std::ostream& out);
void write_lham(const LocalHamiltonianSpec& spec, const std::filesystem::path& path);

}  // namespace qpea
