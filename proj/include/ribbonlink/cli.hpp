/*
 * cli.hpp
 * -------
 * Command-line front end. run_command takes the arguments after the
 * program name and writes to the given streams, so the whole interface is
 * testable in-process.
 *
 * Exit codes: 0 success, 1 parse or validation failure, 2 identity check
 * failed, 3 instance over the enumeration size cap.
 */
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ribbonlink {

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ribbonlink
