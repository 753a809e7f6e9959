#pragma once

#include <cstddef>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "nbga/tsp/instance.hpp"

namespace nbga::tsp {

/// Malformed or unsupported TSPLIB input. `line()` is 1-based, 0 when the
/// problem is not tied to a single line (e.g. a missing section).
class TsplibError : public std::runtime_error {
 public:
  TsplibError(std::size_t line, const std::string& message);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

struct TsplibOptions {
  Rounding rounding = Rounding::Nearest;
};

/// Parses the symmetric subset of TSPLIB: EUC_2D node coordinates, or
/// EXPLICIT weights in FULL_MATRIX, UPPER_ROW or LOWER_DIAG_ROW layout.
/// The known optimum is filled in for the standard benchmark names.
TspInstance parse_tsplib(std::string_view text, const TsplibOptions& options = {});

/// Reads and parses a file; I/O failures surface as TsplibError with line 0.
TspInstance load_tsplib(const std::filesystem::path& path, const TsplibOptions& options = {});

}  // namespace nbga::tsp
