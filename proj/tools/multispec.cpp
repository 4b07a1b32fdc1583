#include <iostream>

#include "multispec/cli.hpp"

int main(int argc, char** argv) {
    try {
        return multispec::cli_run(argc, argv, std::cout, std::cerr);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
