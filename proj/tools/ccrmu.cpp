#include <ccrmu/cli.hpp>

int main( int argc, char** argv ) { return ccrmu::cli::main( argc, argv ); }
