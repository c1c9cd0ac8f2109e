#include "mexlet/parallel.hpp"

#include <atomic>
#include <cmath>
#include <vector>

#include "doctest.h"
#include "mexlet/kernel.hpp"

using namespace mexlet;

TEST_CASE("parallel_for covers every index exactly once at any thread count") {
  for (int nt : {1, 2, 3, 7}) {
    std::vector<std::atomic<int>> touched(1000);
    parallel_for_threads(touched.size(), nt,
                         [&](std::size_t i) { touched[i].fetch_add(1); });
    for (auto& t : touched) CHECK(t.load() == 1);
  }
}

TEST_CASE("grid evaluation is byte-identical across thread counts") {
  FilterParams p{2.0, 4, 2, SeriesVariant::HalfInteger, WeightVariant::SquaredArgument};
  ProfileEvaluator eval(p);
  std::vector<double> thetas(257);
  for (std::size_t i = 0; i < thetas.size(); ++i)
    thetas[i] = 3.14159265358979324 * static_cast<double>(i) / (thetas.size() - 1);

  std::vector<double> serial(thetas.size()), threaded(thetas.size());
  parallel_for_threads(thetas.size(), 1,
                       [&](std::size_t i) { serial[i] = eval(thetas[i]); });
  parallel_for_threads(thetas.size(), 5,
                       [&](std::size_t i) { threaded[i] = eval(thetas[i]); });
  for (std::size_t i = 0; i < thetas.size(); ++i) CHECK(serial[i] == threaded[i]);
}

TEST_CASE("max_threads is at least one") { CHECK(max_threads() >= 1); }
