#include <string>
#include <vector>

#include "qvlab/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return qvlab::run_cli(args);
}
