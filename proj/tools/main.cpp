#include <string>
#include <vector>

#include "ballgreen/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return ballgreen::cli::dispatch(args);
}
