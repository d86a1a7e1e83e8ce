#include "cli.hpp"

int main(int argc, char** argv) { return veron::cli::run(argc, argv); }
