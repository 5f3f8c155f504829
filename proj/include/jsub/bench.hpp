#pragma once

/**
 * @file bench.hpp
 * @brief Composition-kernel timing harness. Kernels are cross-validated on
 * the exact inputs about to be timed; disagreement aborts the run.
 */

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "jsub/series.hpp"

namespace jsub {

struct BenchRow {
  std::string kernel;
  std::size_t precision;
  std::size_t repetitions;
  long long nanos;  // total wall time over all repetitions
};

std::string kernel_name(ComposeKernel kernel);
ComposeKernel parse_kernel(const std::string& name);

/// Times each kernel on one random composition per size. Throws
/// DomainError if the kernels disagree on any input.
std::vector<BenchRow> run_bench(const std::vector<std::size_t>& sizes,
                                const Ring& ring,
                                const std::vector<ComposeKernel>& kernels,
                                std::uint64_t seed = 42);

/// "kernel,precision,repetitions,nanos" header plus one row per line.
std::string bench_csv(const std::vector<BenchRow>& rows);

}  // namespace jsub
