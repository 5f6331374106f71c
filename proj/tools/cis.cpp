#include "cis/cli.hpp"

int main(int argc, char** argv) { return cis::cli::run(argc, argv); }
