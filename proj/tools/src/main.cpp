#include "tricolor/cli.hpp"

int main(int argc, char** argv) { return tricolor::cli::run(argc, argv); }
