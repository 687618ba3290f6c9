#include "cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv, argv + argc);
    return rcalg::cli::run_cli(args, std::cout, std::cerr);
}
