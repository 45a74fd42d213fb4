#include <iostream>

#include <icres/cli.hpp>

int main(int argc, char** argv)
{
    return icres::cli::run(argc, argv, std::cout, std::cerr);
}
