#include "godeaux/commands.hpp"

#include <iostream>

int main(int argc, char** argv) { return godeaux::run_cli(argc, argv, std::cout, std::cerr); }
