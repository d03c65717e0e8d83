#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "expdio/arith.hpp"
#include "expdio/conjecture.hpp"
#include "expdio/errors.hpp"
#include "expdio/types.hpp"

namespace expdio {

struct SearchConfig {
  unsigned long a_max = 2;
  unsigned long b_max = 2;
  BigInt power_cap;  // bound on a^x, b^y and a^x + b^y
  unsigned jobs = 1;
  std::optional<std::string> checkpoint_path;
  bool resume = false;
  // Write the checkpoint after this many newly completed pairs.
  std::size_t checkpoint_every = 256;
  // Stop once this (a, b) pair is complete, leaving the report incomplete.
  std::optional<std::pair<unsigned long, unsigned long>> stop_after;

  void validate() const;
};

struct FoundTriple {
  BigInt a;
  BigInt b;
  BigInt c;
  std::vector<Solution> solutions;  // sorted by (z, x, y)

  bool operator==(const FoundTriple&) const = default;
};

struct PairFailure {
  unsigned long a = 0;
  unsigned long b = 0;
  std::string message;

  bool operator==(const PairFailure&) const = default;
};

struct SearchReport {
  unsigned long a_max = 0;
  unsigned long b_max = 0;
  BigInt power_cap;
  std::size_t pairs_total = 0;
  std::size_t pairs_processed = 0;
  bool complete = false;
  std::vector<FoundTriple> triples;  // a <= b, sorted by (a, b, c)
  std::vector<PairFailure> failures;
  // Run metadata; not part of the canonical report.
  double elapsed_seconds = 0;
  unsigned jobs = 1;
  std::size_t pairs_resumed = 0;
};

/// Coprime pairs 2 <= a <= a_max, a < b <= b_max in search order.
std::vector<std::pair<unsigned long, unsigned long>> search_pairs(unsigned long a_max,
                                                                  unsigned long b_max);

/// All (a, b, c) with at least two solutions whose terms stay within cap.
std::vector<FoundTriple> search_pair(unsigned long a, unsigned long b,
                                     const BigInt& cap);

SearchReport search_range(const SearchConfig& config);

class CheckpointError : public DomainError {
 public:
  using DomainError::DomainError;
};
class CheckpointCorrupt : public CheckpointError {
 public:
  using CheckpointError::CheckpointError;
};
class CheckpointMismatch : public CheckpointError {
 public:
  using CheckpointError::CheckpointError;
};

std::string config_hash(const SearchConfig& config);

struct PairRecord {
  unsigned long a = 0;
  unsigned long b = 0;
  std::vector<FoundTriple> triples;
  std::optional<std::string> failure;
};

struct Checkpoint {
  std::string hash;
  std::vector<PairRecord> records;  // a prefix of search_pairs() order
  bool complete = false;
};

/// Atomically replaces the file (write to a sibling, then rename).
void save_checkpoint(const std::string& path, const Checkpoint& checkpoint);
/// Throws CheckpointCorrupt for unreadable, empty or malformed files and
/// CheckpointMismatch when the recorded hash differs from expected_hash.
Checkpoint load_checkpoint(const std::string& path, const std::string& expected_hash);

struct ConjectureDiff {
  std::vector<KnownTriple> expected_and_found;
  std::vector<KnownTriple> expected_out_of_range;  // outside ranges or cap
  std::vector<KnownTriple> missing;                // in range, not reported
  std::vector<FoundTriple> unexpected;
  // Found triples whose in-cap solutions differ from the known ones.
  std::vector<FoundTriple> solution_mismatches;
};

ConjectureDiff compare_with_conjecture(const SearchReport& report);

}  // namespace expdio
