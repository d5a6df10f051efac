#include "lietk/cli.hpp"

int main(int argc, char** argv) { return lietk::cli::run(argc, argv); }
