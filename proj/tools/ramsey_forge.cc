/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <ramsey/cli.hh>

#include <iostream>

auto main(int argc, char * argv[]) -> int
{
    return ramsey::cli::run(argc, argv, std::cout, std::cerr);
}
