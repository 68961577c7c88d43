#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "matroid/matroid.hpp"

namespace matroid {

struct VerifyOptions {
  int max_n = 7;              // largest ground-set size scanned
  std::uint64_t seed = 0;     // seed for the randomized suites
  int jobs = 1;               // worker threads for the pair-relation scans
};

struct Counterexample {
  Matroid m;
  std::string note;  // which clause failed and for which elements
};

struct VerificationReport {
  std::string theorem_id;
  std::string universe;  // description of the instance set that was scanned
  std::int64_t instances_checked = 0;
  // "pass" | "fail" | "conjecture-pass"; the last marks a suite whose claim
  // is an open question rather than a proved statement.
  std::string status;
  std::vector<Counterexample> counterexamples;
  double wall_time_seconds = 0.0;
};

// All verification ids in presentation order: "T1".."T17" plus "ENUM".
std::vector<std::string> verification_ids();

// Runs one suite; throws UnknownName for an id outside verification_ids().
VerificationReport run_verification(const std::string& theorem_id,
                                    const VerifyOptions& options = {});

// Independent enumeration oracle: counts isomorphism classes of matroids on
// 0..max_n elements by filtering every family of equal-size subsets through
// the basis-exchange axiom and deduplicating by the minimum permuted image.
// Deliberately shares no code with the extension-based enumerator.
std::vector<std::int64_t> brute_force_class_counts(int max_n);

}  // namespace matroid
