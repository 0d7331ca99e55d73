#include <iostream>

#include "bcabe/cli/commands.hpp"

int main(int argc, char** argv)
{
    return bcabe::cli::run(argc, argv, std::cout, std::cerr);
}
