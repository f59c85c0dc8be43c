#include <iostream>
#include <string>
#include <vector>

#include "isnad/app.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return isnad::run(args, std::cout, std::cerr);
}
