#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "polyspec/spectral_ops.hpp"
#include "polyspec/spectrum.hpp"
#include "polyspec/verify.hpp"

namespace polyspec::cli {

inline constexpr const char* kSchemaVersion = "1.0";

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kUsage = 2,
  kRange = 3,
};

/// Serialized result of the `spectrum` command.
struct OutputRecord {
  std::string schema_version = kSchemaVersion;
  std::vector<double> radii;
  int q = 1;
  double max_lambda = 0.0;
  double group_tol = 1e-11;
  std::size_t witnesses = 8;
  std::vector<SpectralPoint> points;
};

nlohmann::json to_json(const ModeFactor& f);
nlohmann::json to_json(const EigenMode& m);
nlohmann::json to_json(const SpectralPoint& p);
nlohmann::json to_json(const OutputRecord& r);
nlohmann::json to_json(const verify::SuiteReport& r);
nlohmann::json to_json(const Expansion& x);

ModeFactor factor_from_json(const nlohmann::json& j);
EigenMode mode_from_json(const nlohmann::json& j);
SpectralPoint point_from_json(const nlohmann::json& j);
OutputRecord record_from_json(const nlohmann::json& j);

/// "1,2.5,3" -> {1, 2.5, 3}. Throws std::invalid_argument on malformed text.
std::vector<double> parse_list(const std::string& text);

/// Entry point shared by the executable and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace polyspec::cli
