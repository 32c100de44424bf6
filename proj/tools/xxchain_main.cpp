#include "xxchain/cli.hpp"
#include "xxchain/parallel.hpp"

int main(int argc, char** argv) {
  xxchain::pin_blas_threads();
  return xxchain::run_cli(argc, argv);
}
