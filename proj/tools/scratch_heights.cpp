// Exploration driver: print the leftover-height scan for one parameter set.
#include <cstdio>
#include <cstdlib>

#include "vss/profiles.hpp"

using namespace vss;

int main(int argc, char** argv) {
  SimilarityParams params;
  params.p = argc > 1 ? std::atof(argv[1]) : 3.0;
  params.n = argc > 2 ? std::atof(argv[2]) : 1.0;
  params.eps = argc > 3 ? std::atof(argv[3]) : 1e-3;
  const double lo = argc > 4 ? std::atof(argv[4]) : 2.0;
  const double hi = argc > 5 ? std::atof(argv[5]) : 24.0;
  const int count = argc > 6 ? std::atoi(argv[6]) : 23;
  std::vector<double> ys(count);
  for (int i = 0; i < count; ++i)
    ys[i] = lo + (hi - lo) * i / double(count - 1);
  auto hs = fbp_interface_heights(params, ys);
  for (int i = 0; i < count; ++i)
    std::printf("y0=%7.3f  h=%+.6e\n", ys[i], hs[i]);
  return 0;
}
