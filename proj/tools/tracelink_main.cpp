#include <iostream>

#include "tracelink/cli.hpp"

int main(int argc, char** argv) {
    return tracelink::cli::run(argc, argv, std::cout, std::cerr);
}
