#include "hilbalg/cli.hpp"

int main(int argc, char** argv) { return hilbcli::main_entry(argc, argv); }
