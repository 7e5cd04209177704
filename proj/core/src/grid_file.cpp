#include "polyspec/grid_file.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>

#include "polyspec/errors.hpp"

namespace polyspec {

namespace {

constexpr std::array<char, 4> kMagic = {'P', 'S', 'P', 'C'};
// Guards against absurd headers before allocating.
constexpr std::uint64_t kMaxSamples = std::uint64_t{1} << 32;

template <typename T>
void put(std::ostream& out, T value) {
  std::array<unsigned char, sizeof(T)> bytes;
  std::memcpy(bytes.data(), &value, sizeof(T));
  if constexpr (std::endian::native == std::endian::big) {
    std::reverse(bytes.begin(), bytes.end());
  }
  out.write(reinterpret_cast<const char*>(bytes.data()), sizeof(T));
}

template <typename T>
T get(std::istream& in) {
  std::array<unsigned char, sizeof(T)> bytes;
  in.read(reinterpret_cast<char*>(bytes.data()), sizeof(T));
  if (!in) {
    throw InvalidArgument("grid file: truncated input");
  }
  if constexpr (std::endian::native == std::endian::big) {
    std::reverse(bytes.begin(), bytes.end());
  }
  T value;
  std::memcpy(&value, bytes.data(), sizeof(T));
  return value;
}

}  // namespace

void write_grid(std::ostream& out, const SampledGrid& grid) {
  grid.validate();
  out.write(kMagic.data(), kMagic.size());
  put<std::uint32_t>(out, kGridFormatVersion);
  put<std::uint32_t>(out, static_cast<std::uint32_t>(grid.radii.size()));
  put<std::uint32_t>(out, static_cast<std::uint32_t>(grid.J.size()));
  for (std::size_t k = 0; k < grid.radii.size(); ++k) {
    put<std::uint32_t>(out, static_cast<std::uint32_t>(grid.radial_nodes[k]));
    put<std::uint32_t>(out, static_cast<std::uint32_t>(grid.angular_nodes[k]));
  }
  for (double a : grid.radii) {
    put<double>(out, a);
  }
  for (std::size_t j : grid.J) {
    put<std::uint32_t>(out, static_cast<std::uint32_t>(j + 1));
  }
  for (const auto& s : grid.samples) {
    put<double>(out, s.real());
    put<double>(out, s.imag());
  }
  if (!out) {
    throw Error("grid file: write failed");
  }
}

SampledGrid read_grid(std::istream& in) {
  std::array<char, 4> magic{};
  in.read(magic.data(), magic.size());
  if (!in || magic != kMagic) {
    throw InvalidArgument("grid file: bad magic, expected \"PSPC\"");
  }
  const auto version = get<std::uint32_t>(in);
  if (version != kGridFormatVersion) {
    throw InvalidArgument("grid file: unsupported version " + std::to_string(version));
  }
  const auto n = get<std::uint32_t>(in);
  const auto q = get<std::uint32_t>(in);
  if (n < 2 || n > 16 || q < 1 || q >= n) {
    throw InvalidArgument("grid file: invalid n/q header");
  }
  SampledGrid grid;
  std::uint64_t total = 1;
  for (std::uint32_t k = 0; k < n; ++k) {
    const auto radial = get<std::uint32_t>(in);
    const auto angular = get<std::uint32_t>(in);
    if (radial == 0 || angular == 0) {
      throw InvalidArgument("grid file: zero node count");
    }
    total *= static_cast<std::uint64_t>(radial) * angular;
    if (total > kMaxSamples) {
      throw InvalidArgument("grid file: sample count too large");
    }
    grid.radial_nodes.push_back(static_cast<int>(radial));
    grid.angular_nodes.push_back(static_cast<int>(angular));
  }
  for (std::uint32_t k = 0; k < n; ++k) {
    grid.radii.push_back(get<double>(in));
  }
  for (std::uint32_t i = 0; i < q; ++i) {
    const auto j = get<std::uint32_t>(in);
    if (j < 1 || j > n) {
      throw InvalidArgument("grid file: J entry out of range");
    }
    grid.J.push_back(j - 1);
  }
  grid.samples.resize(static_cast<std::size_t>(total));
  for (auto& s : grid.samples) {
    const double re = get<double>(in);
    const double im = get<double>(in);
    s = {re, im};
  }
  grid.validate();
  return grid;
}

void write_grid_file(const std::string& path, const SampledGrid& grid) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error("grid file: cannot open " + path + " for writing");
  }
  write_grid(out, grid);
}

SampledGrid read_grid_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error("grid file: cannot open " + path);
  }
  return read_grid(in);
}

}  // namespace polyspec
