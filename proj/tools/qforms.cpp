#include <iostream>

#include <qforms/cli.hpp>

int main(int argc, char **argv)
{
    return qforms::cli::run(argc, argv, std::cout, std::cerr);
}
