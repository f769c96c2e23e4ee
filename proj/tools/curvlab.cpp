#include "curvlab/cli.hpp"

int main(int argc, char** argv) { return curvlab::cli::run(argc, argv, std::cout, std::cerr); }
