#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bicross {

// Command line driver behind the bicross tool. args excludes the program
// name. Returns 0 on success, 1 on domain errors (with a one-line message
// on err, plus a JSON error object on out in --format json mode), 2 on
// usage errors. Reports are deterministic for fixed inputs regardless of
// the --parallelism setting.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bicross
