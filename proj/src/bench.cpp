#include "jsub/bench.hpp"

#include <chrono>

#include "jsub/verify.hpp"

namespace jsub {

std::string kernel_name(ComposeKernel kernel) {
  return kernel == ComposeKernel::Horner ? "horner" : "power-table";
}

ComposeKernel parse_kernel(const std::string& name) {
  if (name == "horner") return ComposeKernel::Horner;
  if (name == "power-table") return ComposeKernel::PowerTable;
  throw DomainError("unknown kernel '" + name +
                    "' (expected horner or power-table)");
}

std::vector<BenchRow> run_bench(const std::vector<std::size_t>& sizes,
                                const Ring& ring,
                                const std::vector<ComposeKernel>& kernels,
                                std::uint64_t seed) {
  using clock = std::chrono::steady_clock;
  std::vector<BenchRow> rows;
  std::mt19937_64 rng(seed);
  for (std::size_t m : sizes) {
    Series f = random_series(ring, m, rng, 0);
    Series g = random_series(ring, m, rng, 0);

    // Validate before timing: every kernel must produce the same series.
    Series reference = compose(f, g, kernels.front());
    for (std::size_t k = 1; k < kernels.size(); ++k)
      if (!(compose(f, g, kernels[k]) == reference))
        throw DomainError("composition kernels disagree at precision " +
                          std::to_string(m));

    std::size_t reps = m >= 192 ? 2 : (m >= 48 ? 8 : 32);
    for (ComposeKernel kernel : kernels) {
      auto start = clock::now();
      for (std::size_t r = 0; r < reps; ++r) {
        Series out = compose(f, g, kernel);
        (void)out;
      }
      auto nanos = std::chrono::duration_cast<std::chrono::nanoseconds>(
                       clock::now() - start)
                       .count();
      rows.push_back(BenchRow{kernel_name(kernel), m, reps,
                              static_cast<long long>(nanos)});
    }
  }
  return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::string out = "kernel,precision,repetitions,nanos\n";
  for (const BenchRow& r : rows)
    out += r.kernel + "," + std::to_string(r.precision) + "," +
           std::to_string(r.repetitions) + "," + std::to_string(r.nanos) + "\n";
  return out;
}

}  // namespace jsub
