// Times the serial reference loops against the OpenMP loops on a few fixed
// workloads and checks that both produce the same answer.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include <omp.h>

#include "zono/polygraph.hpp"
#include "zono/summand.hpp"
#include "zono/zonotope.hpp"

using namespace zono;

static GeneratorSet random_generators(std::mt19937 &rng, std::size_t dim, std::size_t m) {
  std::uniform_int_distribution<int> coord(-5, 5);
  std::vector<RationalPoint> vs;
  while (vs.size() < m) {
    RationalPoint p(dim);
    for (std::size_t k = 0; k < dim; ++k) p[k] = coord(rng);
    if (!p.is_zero()) vs.push_back(p);
  }
  return canonicalize(dim, vs);
}

template <class Result>
static void compare(const char *name, const std::function<Result(Execution)> &work) {
  auto time = [&](Execution exec, Result &out) {
    auto t0 = std::chrono::steady_clock::now();
    out = work(exec);
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  };
  Result serial, parallel;
  const double ts = time(Execution::serial, serial);
  const double tp = time(Execution::parallel, parallel);
  std::printf("%-28s serial %8.3f s   parallel %8.3f s   speedup %5.2fx   %s\n", name, ts, tp, ts / tp,
              serial == parallel ? "match" : "MISMATCH");
}

int main(int argc, char **argv) {
  const unsigned seed = argc > 1 ? static_cast<unsigned>(std::stoul(argv[1])) : 20240611u;
  std::mt19937 rng(seed);
  std::printf("threads: %d   seed: %u\n", omp_get_max_threads(), seed);

  const GeneratorSet big = random_generators(rng, 4, 10);
  compare<std::vector<VertexRecord>>("enumerate_vertices d=4 m=10", [&](Execution exec) {
    return enumerate_vertices(big, {.forward_only = true, .exec = exec});
  });

  const GeneratorSet mid = random_generators(rng, 3, 6);
  std::vector<RationalPoint> mid_vertices;
  for (auto &rec : enumerate_vertices(mid)) mid_vertices.push_back(rec.point);

  compare<std::vector<RationalPoint>>("hull_vertices (sum cloud)", [&](Execution exec) {
    std::vector<RationalPoint> cloud;
    for (std::size_t mask = 0; mask < (std::size_t{1} << mid.size()); ++mask) {
      Subset X(mid.size(), mask);
      cloud.push_back(mid.sum_of(X));
    }
    return hull_vertices(PointSet(3, unique_points(cloud)), exec);
  });

  compare<std::vector<std::pair<std::size_t, std::size_t>>>("graph_of d=3 m=6", [&](Execution exec) {
    return graph_of(PointSet(3, mid_vertices), exec).edges;
  });

  compare<bool>("decide_zonotope d=3 m=6", [&](Execution exec) {
    auto decision = decide_zonotope(mid_vertices, exec);
    return std::holds_alternative<GeneratorSet>(decision) && std::get<GeneratorSet>(decision) == mid;
  });
  return 0;
}
