#include <iostream>
#include <string>
#include <vector>

#include "bloch/cli/app.hpp"

int main(int argc, char** argv)
{
    const std::vector<std::string> args(argv, argv + argc);
    return bloch::cli::main_entry(args, std::cout, std::cerr);
}
