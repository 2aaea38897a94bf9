#include <string>
#include <vector>

#include "levyopt/harness.hpp"

int main(int argc, char** argv) {
  return levyopt::cli_entry(std::vector<std::string>(argv + 1, argv + argc));
}
