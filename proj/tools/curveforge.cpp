#include <iostream>
#include <string>
#include <vector>

#include "curveforge/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return curveforge::run(args, std::cout, std::cerr);
}
