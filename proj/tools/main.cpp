// optia_cli: command-line front end.
//
//   optia_cli run --algo ia-hyp --function onemax --n 100 --budget 10000000 --runs 50 --seed 7 --out res/onemax
//   optia_cli sweep --algo ia-hyp --function onemax --n-list 25,50,100 --budget 10000000 --runs 20
//   optia_cli verify-op --which hypermutation --n 12 --k 2 --samples 1000000
//   optia_cli report --in res/onemax.json
//
// Exit codes: 0 ok/pass, 1 invalid flags, 2 verification failed, 3 I/O error.
#include <iostream>

#include "optia/cli.hpp"

int main(int argc, char** argv) { return optia::cli::run(argc, argv, std::cout, std::cerr); }
