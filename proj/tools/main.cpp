#include "cli.hpp"

int main(int argc, char** argv) { return colehopf::cli::dispatch(argc, argv); }
