#include "cli.hpp"

int main(int argc, char** argv) { return rootloci::cli::run(argc, argv); }
