#include "epc/cli.hpp"

int main(int argc, char** argv) { return epc::cli::run(argc, argv); }
