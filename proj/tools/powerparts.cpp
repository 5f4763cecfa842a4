#include <iostream>

#include "powerparts/cli.hpp"

int main(int argc, char** argv)
{
    return powerparts::cli::run(argc, argv, std::cout, std::cerr);
}
