#include "symun/commands.hpp"

int main(int argc, char** argv) { return symun::run_cli(argc, argv); }
