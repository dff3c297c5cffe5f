#include "cli.hpp"

int main(int argc, char** argv) {
  return trigas::cli::run(std::vector<std::string>(argv + 1, argv + argc));
}
