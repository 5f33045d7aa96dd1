#include "matroidlab/cli.hpp"

int main(int argc, char** argv) { return matroidlab::cli::run_cli(argc, argv); }
