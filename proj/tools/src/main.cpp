#include "polarikit_cli/app.hpp"

int main(int argc, char** argv) {
  return polarikit::cli::run_cli(argc, argv);
}
