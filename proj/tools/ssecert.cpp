#include <iostream>

#include "sse/cli.hpp"

int main(int argc, char** argv) { return sse::cli::run(argc, argv, std::cout, std::cerr); }
