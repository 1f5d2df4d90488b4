#include <iostream>

#include "tamecft/cli.hpp"

int main(int argc, char** argv)
{
    return tamecft::cli::run(argc, argv, std::cout, std::cerr);
}
