#include <electguard/cli.hpp>

#include <iostream>

int main(int argc, char ** argv)
{
    return electguard::run_cli(argc, argv, std::cout, std::cerr);
}
