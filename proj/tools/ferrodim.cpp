#include <ferrodim/cli.hpp>

#include <iostream>

auto main(int argc, char * argv[]) -> int
{
    return ferrodim::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cin, std::cout, std::cerr);
}
