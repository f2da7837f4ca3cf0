#include "quilt/cli.hpp"

int main(int argc, char** argv) { return quilt::run_cli(argc, argv); }
