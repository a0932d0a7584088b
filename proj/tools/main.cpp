#include "imd/cli.hpp"

int main(int argc, char** argv) { return imd::run_cli(argc, argv); }
