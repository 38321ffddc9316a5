#include <iostream>

#include "rueppel/cli.hpp"
#include "rueppel/oeis.hpp"

int main(int argc, char** argv) {
  rueppel::CliHooks hooks;
  hooks.fetcher = rueppel::https_fetcher();
  return rueppel::cli_main(argc, argv, std::cout, std::cerr, hooks);
}
