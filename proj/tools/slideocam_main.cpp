#include <iostream>

#include "slideocam/commands.hpp"

int main(int argc, char** argv)
{
    return slideocam::run_cli(argc, argv, std::cout, std::cerr);
}
