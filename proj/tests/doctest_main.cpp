#define DOCTEST_CONFIG_IMPLEMENT
#include "doctest.h"

#include "xxchain/parallel.hpp"

int main(int argc, char** argv) {
  xxchain::pin_blas_threads();
  doctest::Context context(argc, argv);
  return context.run();
}
