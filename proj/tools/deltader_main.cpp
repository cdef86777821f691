#include "deltader/cli.hpp"

int main(int argc, char** argv) { return deltader::run_cli(argc, argv); }
