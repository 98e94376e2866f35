#include "pacioli/cli.hpp"

int main(int argc, char** argv) { return pacioli::cli_main(argc, argv); }
