#include <iostream>

#include <qhook/cli.hpp>

int main(int argc, char **argv)
{
    return qhook::cli::run(argc, argv, std::cout, std::cerr);
}
