#include "mubforge/cli.hpp"

int main(int argc, char** argv) { return mubforge::cli_main(argc, argv); }
