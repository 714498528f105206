#pragma once

#include <iosfwd>

namespace semitorsion::cli {

/// Exit codes: 0 success, 1 usage or parse error, 2 a violation was found.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace semitorsion::cli
