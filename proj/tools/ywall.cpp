#include "ywall/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return ywall::cli::run(argc, argv, std::cout, std::cerr);
}
