#include "cli.hpp"

int main(int argc, char** argv) { return biplane::cli::run(argc, argv); }
