#include "gu3/cli.hpp"

int main(int argc, char** argv) { return gu3::cli::run_main(argc, argv); }
