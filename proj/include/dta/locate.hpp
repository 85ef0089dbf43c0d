#pragma once

// Fault localization: run a detecting array as a test suite, then recover
// the faulty t-way interactions from the pass/fail outcomes.

#include <string>
#include <variant>
#include <vector>

#include "dta/core.hpp"
#include "dta/kernels.hpp"

namespace dta {

/// true = the test failed.
class OutcomeVector {
 public:
  OutcomeVector() = default;
  explicit OutcomeVector(std::vector<bool> failed) : failed_(std::move(failed)) {}
  static OutcomeVector all_pass(std::size_t rows) {
    return OutcomeVector(std::vector<bool>(rows, false));
  }

  std::size_t size() const { return failed_.size(); }
  bool failed(std::size_t r) const { return failed_[r]; }
  RowSet failing_rows() const;
  /// "PPF..." one character per row.
  std::string to_string() const;

  bool operator==(const OutcomeVector&) const = default;

 private:
  std::vector<bool> failed_;
};

struct Identified {
  std::vector<Interaction> faults;
  bool operator==(const Identified&) const = default;
};
struct TooManyFaults {
  std::size_t candidates = 0;
  bool operator==(const TooManyFaults&) const = default;
};
struct Inconsistent {
  RowSet unexplained;
  bool operator==(const Inconsistent&) const = default;
};

using LocateResult = std::variant<Identified, TooManyFaults, Inconsistent>;

/// Row r fails iff it covers at least one fault. Faults must share one
/// strength.
OutcomeVector simulate_outcome(const MixedArray& a,
                               std::span<const Interaction> faults);

/// Candidates are the t-way interactions whose rows all failed. At most d
/// candidates that explain every failing row are the fault set; more than d
/// means more than d faults; otherwise some failing rows stay unexplained.
/// Exact when `a` is a (d,t)-DTA with more than d t-way interactions.
LocateResult locate_faults(const MixedArray& a, std::size_t d, std::size_t t,
                           const OutcomeVector& y, Exec exec = Exec::parallel);

std::string describe(const LocateResult& result);

}  // namespace dta
