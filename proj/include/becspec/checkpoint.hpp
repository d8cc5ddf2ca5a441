#pragma once

#include <string>

#include "becspec/field.hpp"

namespace becspec {

/// Binary wavefunction checkpoint.
/// Layout: magic "BECW", version u16, dims 3xu32, spacing 3xf64 (m),
/// norm_target f64, then nx*ny*nz complex<f64> pairs, little-endian,
/// row-major with x fastest. Round-trips are bit-identical.
inline constexpr char checkpoint_magic[4] = {'B', 'E', 'C', 'W'};
inline constexpr std::uint16_t checkpoint_version = 1;

void write_checkpoint(const ComplexField& field, const std::string& path);
ComplexField read_checkpoint(const std::string& path);

}  // namespace becspec
