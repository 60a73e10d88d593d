#pragma once

#include <iosfwd>

namespace courtmix::cli {

/// Entry point shared by the binary and the tests. Writes results to `out`
/// and diagnostics to `err`. Returns 0 on success, 1 on failed verification,
/// 2 on usage errors.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace courtmix::cli
