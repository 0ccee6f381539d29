#include "app.hpp"

int main(int argc, char** argv) { return seqconv::cli::run(argc, argv); }
