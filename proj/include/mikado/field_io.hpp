#pragma once

// Binary field container, little-endian throughout:
//
//   offset  size  content
//   0       4     magic "MKF1"
//   4       8     d            (uint64)
//   12      8     N            (uint64)
//   20      8     Nt           (uint64)
//   28      8     T            (IEEE-754 binary64)
//   36      8     components   (uint64)
//   44      ...   samples      (binary64), component-major, then slice, then
//                              row-major grid index (axis 0 slowest)

#include <filesystem>
#include <iosfwd>
#include <string_view>
#include <vector>

#include "mikado/grid.hpp"

namespace mikado {

struct FieldBundle {
    GridSpec spec;
    std::vector<ScalarField> components;
};

inline constexpr char kContainerMagic[4] = {'M', 'K', 'F', '1'};
inline constexpr std::size_t kContainerHeaderBytes = 44;

void write_container(std::ostream& out, const FieldBundle& bundle);

/// Throws FormatError naming the byte offset of the first problem.
FieldBundle read_container(std::istream& in);

/// Writes to a temporary sibling file, then renames over `path`.
void save_container(const std::filesystem::path& path, const FieldBundle& bundle);
FieldBundle load_container(const std::filesystem::path& path);

/// Writes `contents` to a temporary sibling of `path` and renames it into place.
void write_file_atomic(const std::filesystem::path& path, std::string_view contents);

FieldBundle bundle(const ScalarField& f);
FieldBundle bundle(const VectorField& v);

/// A transport state: component 0 is the density, components 1..d the velocity.
FieldBundle bundle_state(const ScalarField& rho, const VectorField& u);

ScalarField scalar_from(const FieldBundle& b);
VectorField vector_from(const FieldBundle& b);

struct StateFields {
    ScalarField rho;
    VectorField u;
};
StateFields state_from(const FieldBundle& b);

}  // namespace mikado
