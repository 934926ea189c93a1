#include "anomaly/cli.hpp"

#include <iostream>

int main(int argc, char **argv) { return anomaly::cli::run(argc, argv, std::cout, std::cerr); }
