#include <iostream>

#include "gitkit_cli/app.hpp"

int main(int argc, char** argv) { return gitkit::cli::run(argc, argv, std::cout, std::cerr); }
