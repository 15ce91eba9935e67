#include "confhom/cli.hpp"

int main(int argc, char** argv) { return confhom::cli::main_entry(argc, argv); }
