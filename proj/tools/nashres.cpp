#include "nashres/cli.hpp"

int main(int argc, char** argv) { return nashres::cli::run(argc, argv); }
