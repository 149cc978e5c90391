#include <iostream>

#include "qdecoh/app/commands.hpp"

int main(int argc, char** argv) { return qdecoh::app::run_cli(argc, argv, std::cout, std::cerr); }
