#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace valence {

// Full command-line front end; `args` excludes the program name.  Returns
// 0 on success, 1 on usage errors, 2 on data or runtime errors.  Kept in
// the library so tests can drive it in-process.
int cli_main(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace valence
