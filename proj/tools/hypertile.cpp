#include "hypertile/cli.hpp"

int main(int argc, char** argv) { return hypertile::cli::run(argc, argv); }
