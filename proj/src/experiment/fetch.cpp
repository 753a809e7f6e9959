#include "nbga/experiment/fetch.hpp"

#include <httplib.h>

#include <fstream>
#include <system_error>

#include "nbga/tsp/tsplib.hpp"

namespace nbga {

namespace {

struct Endpoint {
  std::string origin;  // scheme://host[:port]
  std::string prefix;  // path without trailing slash
};

Endpoint split_url(const std::string& url) {
  const auto scheme_end = url.find("://");
  if (scheme_end == std::string::npos) throw FetchError("base URL needs a scheme: '" + url + "'");
  const auto scheme = url.substr(0, scheme_end);
  if (scheme != "http" && scheme != "https") {
    throw FetchError("unsupported URL scheme '" + scheme + "'");
  }
#ifndef CPPHTTPLIB_OPENSSL_SUPPORT
  if (scheme == "https") throw FetchError("this build has no TLS support; use an http:// mirror");
#endif
  const auto path_start = url.find('/', scheme_end + 3);
  Endpoint endpoint;
  endpoint.origin = url.substr(0, path_start);
  if (path_start != std::string::npos) endpoint.prefix = url.substr(path_start);
  while (!endpoint.prefix.empty() && endpoint.prefix.back() == '/') endpoint.prefix.pop_back();
  return endpoint;
}

bool parses(const std::filesystem::path& path) {
  try {
    tsp::load_tsplib(path);
    return true;
  } catch (const std::exception&) {
    return false;
  }
}

}  // namespace

std::vector<FetchedInstance> fetch_instances(std::span<const std::string> names,
                                             const std::string& base_url,
                                             const std::filesystem::path& dest_dir) {
  if (base_url.empty()) {
    throw FetchError(std::string("no base URL; pass one or set ") + kFetchBaseUrlEnv);
  }
  const auto endpoint = split_url(base_url);

  std::error_code ec;
  std::filesystem::create_directories(dest_dir, ec);
  if (ec) throw FetchError("cannot create '" + dest_dir.string() + "': " + ec.message());

  httplib::Client client(endpoint.origin);
  client.set_connection_timeout(10);
  client.set_read_timeout(30);
  client.set_follow_location(true);

  std::vector<FetchedInstance> fetched;
  for (const auto& name : names) {
    const auto target = dest_dir / (name + ".tsp");
    if (std::filesystem::exists(target) && parses(target)) {
      fetched.push_back({name, target, FetchStatus::AlreadyPresent});
      continue;
    }

    const auto url_path = endpoint.prefix + "/" + name + ".tsp";
    const auto response = client.Get(url_path);
    if (!response) {
      throw FetchError("request for " + endpoint.origin + url_path +
                       " failed: " + httplib::to_string(response.error()));
    }
    if (response->status < 200 || response->status >= 300) {
      throw FetchError("GET " + endpoint.origin + url_path + " returned HTTP " +
                       std::to_string(response->status));
    }

    const auto partial = dest_dir / (name + ".tsp.part");
    {
      std::ofstream out(partial, std::ios::binary | std::ios::trunc);
      out << response->body;
      if (!out) {
        std::filesystem::remove(partial, ec);
        throw FetchError("cannot write '" + partial.string() + "'");
      }
    }
    try {
      tsp::load_tsplib(partial);
    } catch (const std::exception& e) {
      std::filesystem::remove(partial, ec);
      throw FetchError("downloaded " + name + " does not parse: " + e.what());
    }
    std::filesystem::rename(partial, target, ec);
    if (ec) {
      std::filesystem::remove(partial, ec);
      throw FetchError("cannot move download into '" + target.string() + "'");
    }
    fetched.push_back({name, target, FetchStatus::Downloaded});
  }
  return fetched;
}

}  // namespace nbga
