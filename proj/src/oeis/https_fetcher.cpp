#include "rueppel/error.hpp"
#include "rueppel/oeis.hpp"

#define CPPHTTPLIB_OPENSSL_SUPPORT
#include "httplib.h"

namespace rueppel {

Fetcher https_fetcher() {
  return [](const std::string& url) -> std::optional<std::string> {
    // Split "scheme://host[:port]/path".
    const std::size_t scheme_end = url.find("://");
    if (scheme_end == std::string::npos) return std::nullopt;
    const std::size_t path_start = url.find('/', scheme_end + 3);
    const std::string origin = url.substr(0, path_start);
    const std::string path = path_start == std::string::npos ? "/" : url.substr(path_start);
    httplib::Client client(origin);
    client.set_follow_location(true);
    client.set_connection_timeout(10);
    client.set_read_timeout(30);
    auto res = client.Get(path);
    if (!res) return std::nullopt;
    if (res->status == 404) throw Error(Errc::UnknownSequence, "no b-file at " + url);
    if (res->status != 200) return std::nullopt;
    return res->body;
  };
}

}  // namespace rueppel
