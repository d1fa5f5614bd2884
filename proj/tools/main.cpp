#include "oie/cli.hpp"

int main(int argc, char** argv) { return oie::run(argc, argv); }
