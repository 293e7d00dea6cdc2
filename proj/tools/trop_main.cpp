#include "trop/cli.hpp"

int main(int argc, char** argv) { return trop::run_cli(argc, argv); }
