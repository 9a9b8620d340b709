#include "cli.hpp"

int main(int argc, char** argv) { return afflow::cli::run_cli(argc, argv); }
