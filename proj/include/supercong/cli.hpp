#pragma once

#include <iosfwd>

namespace supercong {

/// Entry point of the supercong executable. Returns 0 when every asserted
/// check passed, 1 on an asserted failure and 2 on a configuration error.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace supercong
