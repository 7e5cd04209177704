#pragma once

// Binary container for SampledGrid ("PSPC" files). All fields little-endian.
//
//   offset  size        field
//   0       4           magic "PSPC"
//   4       u32         version (1)
//   8       u32         n, number of variables
//   12      u32         q, form degree
//   16      8n          per variable: u32 radial node count, u32 angular node count
//   16+8n   8n          per variable: f64 radius
//   16+16n  4q          u32 entries of J, 1-based, strictly increasing
//   ...     16 * S      S complex samples as (f64 real, f64 imag), row-major over
//                       (r_1, theta_1, ..., r_n, theta_n), last index fastest
//
// S is the product of radial * angular counts. Radial nodes are the
// Gauss-Legendre nodes on [0, a_k] in ascending order; angular nodes are
// theta_l = 2 pi l / count.

#include <cstdint>
#include <iosfwd>
#include <string>

#include "polyspec/spectral_ops.hpp"

namespace polyspec {

inline constexpr std::uint32_t kGridFormatVersion = 1;

void write_grid(std::ostream& out, const SampledGrid& grid);
SampledGrid read_grid(std::istream& in);

void write_grid_file(const std::string& path, const SampledGrid& grid);
SampledGrid read_grid_file(const std::string& path);

}  // namespace polyspec
