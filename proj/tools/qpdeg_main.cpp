#include "qpdeg/commands.hpp"

int main(int argc, char** argv) { return qpdeg::cli::run(argc, argv); }
