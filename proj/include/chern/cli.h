#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace chern::cli {

enum ExitCode
{
	ok = 0,
	usage_error = 1,
	computation_error = 2,
	verification_failure = 3,
};

/**
 * Runs one command line (without the program name). Results go to `out`;
 * diagnostics go to `err` as "error: <code>: <message>".
 */
int run(std::vector<std::string> const &args, std::ostream &out, std::ostream &err);

} // namespace chern::cli
