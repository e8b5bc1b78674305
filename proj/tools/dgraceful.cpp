#include <dgraceful/cli.hpp>

#include <iostream>

auto main(int argc, char * argv[]) -> int
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return dgraceful::run_cli(args, std::cout, std::cerr);
}
