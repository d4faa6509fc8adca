#include "commands.hpp"

int main(int argc, char** argv) { return boxbound::cli::run(argc, argv); }
