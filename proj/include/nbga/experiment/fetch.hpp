#pragma once

#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace nbga {

/// Environment variable consulted when no base URL is passed explicitly.
inline constexpr const char* kFetchBaseUrlEnv = "NBGA_TSPLIB_BASE_URL";

class FetchError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class FetchStatus { Downloaded, AlreadyPresent };

struct FetchedInstance {
  std::string name;
  std::filesystem::path path;
  FetchStatus status;
};

/// Downloads `<base_url>/<name>.tsp` for each name into `dest_dir`. An existing
/// file that already parses is left alone. Downloads go to a temporary file
/// that is only renamed into place after it parses, so a failure never leaves
/// a partial or invalid instance behind. Throws FetchError.
std::vector<FetchedInstance> fetch_instances(std::span<const std::string> names,
                                             const std::string& base_url,
                                             const std::filesystem::path& dest_dir);

}  // namespace nbga
