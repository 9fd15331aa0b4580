#include "doubleseq/cli.hpp"

int main(int argc, char** argv) { return doubleseq::cli_main(argc, argv); }
