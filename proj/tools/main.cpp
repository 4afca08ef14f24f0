#include "peterson/cli.hpp"

int main(int argc, char** argv) { return peterson::cli::run_main(argc, argv); }
