#include "optapprox/cli.hpp"

int main(int argc, char** argv) { return optapprox::cli::dispatch(argc, argv); }
