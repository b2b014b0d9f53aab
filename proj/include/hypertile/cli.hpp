#pragma once

#include <string>
#include <vector>

namespace hypertile::cli {

// Exit codes: 0 success, 1 negative verdict (e.g. no perfect tiling,
// certificate violated), 2 usage error, 3 enumeration guard exceeded.
int run(int argc, const char* const* argv);
int run(const std::vector<std::string>& args);  // args without argv[0]

}  // namespace hypertile::cli
