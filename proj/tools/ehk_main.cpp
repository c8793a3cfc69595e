#include "ehk/cli.hpp"

int main(int argc, char** argv) { return ehk::run_cli(argc, argv); }
