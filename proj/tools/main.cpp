#include "fiberforge/cli.hpp"

int main(int argc, char** argv) { return fiberforge::cli::run(argc, argv); }
