#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace rcalg::cli {

/// args[0] is the program name. Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct CaseReport
{
    std::string id;
    bool pass = false;
    std::vector<std::string> lines;
};

/// Runs one fixture file end to end.
CaseReport reproduce_fixture(const std::string& path);

std::string default_fixture_dir();

} // namespace rcalg::cli
