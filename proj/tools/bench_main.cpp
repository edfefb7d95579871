// Wall-clock comparison of the OpenMP kernels against the serial reference
// paths.  Both must produce exactly the same objects; any difference makes
// the program exit nonzero, so this doubles as a consistency check.
#include <chrono>
#include <cstdio>
#include <tuple>
#include <vector>

#include "coset/gkrs.hpp"
#include "coset/homspace.hpp"
#include "coset/parallel.hpp"
#include "coset/spacespec.hpp"

using namespace coset;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

template <class F>
void bench(const char* name, F&& work) {
  parallel::set_enabled(false);
  auto t0 = Clock::now();
  auto serial = work();
  double ts = std::chrono::duration<double>(Clock::now() - t0).count();

  parallel::set_enabled(true);
  t0 = Clock::now();
  auto openmp = work();
  double tp = std::chrono::duration<double>(Clock::now() - t0).count();

  bool same = serial == openmp;
  if (!same) ++failures;
  std::printf("%-36s  serial %7.3fs  openmp %7.3fs  x%4.2f  %s\n", name, ts,
              tp, tp > 0 ? ts / tp : 0.0, same ? "identical" : "MISMATCH");
  std::fflush(stdout);
}

// Everything a multiplet sweep produces, comparable field by field.
struct SweepDigest {
  std::vector<Weight> lambdas;
  std::vector<bool> verified;
  std::vector<VirtualCharacter> lhs, rhs;
  bool operator==(const SweepDigest&) const = default;
};

using LineDigest =
    std::vector<std::tuple<Weight, Rational, Integer, long long>>;

}  // namespace

int main() {
  std::printf("openmp worker threads: %d\n", parallel::max_threads());

  // Weight multiplicities of a single large irreducible.  A fresh root
  // system per run keeps the character cache from short-circuiting the
  // second measurement.
  bench("character B3 (6,4,2)", [] {
    auto rs = build_root_system(Series::B, 3);
    return character(rs, Weight{6, 4, 2});
  });

  auto rs_mult = build_root_system(Series::B, 3);
  auto left = character_ptr(rs_mult, Weight{3, 2, 1});
  bench("tensor square B3 (3,2,1)", [&] { return multiply(*left, *left); });

  bench("multiplet sweep B3/D3, dim <= 4000", [] {
    auto pair = realize(parse_space_spec("B3/D3")).pair;
    SweepDigest d;
    for (auto& rep : gkrs_sweep(pair, 4000)) {
      d.lambdas.push_back(rep.lambda);
      d.verified.push_back(rep.verified);
      d.lhs.push_back(rep.lhs);
      d.rhs.push_back(rep.rhs);
    }
    return d;
  });

  bench("spectrum B3/D3 mu=(1/2,1/2,1/2), 25 lines", [] {
    auto space = realize(parse_space_spec("B3/D3;mu=1/2,1/2,1/2"));
    LineDigest d;
    for (auto& line : spectrum(space.pair, *space.mu, 25))
      d.emplace_back(line.lambda, line.energy, line.degeneracy,
                     line.frobenius_multiplicity);
    return d;
  });

  if (failures > 0) {
    std::printf("%d benchmark(s) diverged between the two paths\n", failures);
    return 1;
  }
  return 0;
}
