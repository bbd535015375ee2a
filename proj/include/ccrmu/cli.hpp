#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ccrmu::cli
{

/// Runs one command (`check`, `refines`, `translate`, `witness`, `dnf`,
/// `tableau`, `selftest`); `args` excludes the program name.
///
/// Exit codes: 0 true / success, 1 false / no witness, 2 undetermined,
/// usage or I/O error. With `--json` the report is one JSON object whose
/// `reason` field tells the cases of exit code 2 apart.
int run( const std::vector<std::string>& args, std::ostream& out, std::ostream& err );

int main( int argc, char** argv );

} // namespace ccrmu::cli
