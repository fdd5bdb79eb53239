#include "nrange/io.hpp"

int main(int argc, char** argv) { return nrange::run_cli(argc, argv); }
