#include "qgrass/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return qgrass::run_cli(argc, argv, std::cout, std::cerr); }
