#include "commands.hpp"

int main(int argc, char** argv) { return antispec::main_entry(argc, argv); }
