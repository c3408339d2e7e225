#include <iostream>

#include "sptcrank/cli.hpp"

int main(int argc, char** argv)
{
    return sptcrank::cli::run_cli(argc, argv, std::cout, std::cerr);
}
