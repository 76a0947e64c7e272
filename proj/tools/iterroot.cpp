#include "iterroot/cli.hpp"

int main(int argc, char** argv) { return iterroot::cli::run(argc, argv); }
