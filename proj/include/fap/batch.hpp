#pragma once

#include "fap/generators.hpp"

namespace fap {

/*
 * Batch manifest, one instance spec per line ('#' comments):
 *   random <n> <extra_edges> <zero_fraction> <seed>
 *   family <name> <k>
 * Output rows keep manifest order whatever the thread count.
 */
struct ManifestRow {
  enum class Kind { Random, Family };
  Kind kind = Kind::Random;
  GenParams params;  // Random
  Family family = Family::Cycle;
  int k = 0;  // Family
};

std::vector<ManifestRow> parse_manifest(const std::string& text);

Instance instantiate(const ManifestRow& row);

// Solve + exact optimum per manifest row. threads == 1 is the serial
// reference; anything else shards rows across OpenMP workers into
// row-indexed slots.
std::vector<TrialRow> run_batch(const std::vector<ManifestRow>& rows, Mode mode,
                                int threads = 0);

std::string batch_csv(const std::vector<TrialRow>& rows);

}  // namespace fap
