#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace mlmkit {

// Base class for everything thrown by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// A value does not satisfy an operation's structural contract
// (mismatched variable counts, non-PiSigma input, unrepresentable
// conversion, ...).
class ShapeError : public Error {
 public:
  explicit ShapeError(const std::string& msg) : Error(msg) {}
};

// Malformed external input: text that fails to parse or parses to an
// ill-formed value.
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& msg) : Error(msg) {}
};

// An evaluation exceeded its explicit budget. `node_id` identifies the
// offending circuit node when the failure happened inside a circuit
// evaluation; -1 otherwise.
class ResourceError : public Error {
 public:
  explicit ResourceError(const std::string& msg, long long node = -1)
      : Error(msg), node_id(node) {}
  long long node_id;
};

// Caps turning exponential blowup into a structured failure instead of
// memory exhaustion. `max_total_work` counts attempted coefficient
// multiplications (table-entry pairs), `max_table_entries` bounds any
// intermediate or final table.
struct EvalBudget {
  std::uint64_t max_table_entries = 1ull << 21;
  std::uint64_t max_total_work = 1ull << 34;

  static EvalBudget desk_default() { return EvalBudget{}; }
};

// Mutable meter shared across the steps of one evaluation.
class BudgetMeter {
 public:
  explicit BudgetMeter(const EvalBudget& budget) : budget_(budget) {}

  void charge_pairs(std::uint64_t pairs, long long node = -1) {
    work_used_ += pairs;
    if (work_used_ > budget_.max_total_work) {
      throw ResourceError("evaluation work budget exceeded (" +
                              std::to_string(work_used_) + " > " +
                              std::to_string(budget_.max_total_work) +
                              node_suffix(node),
                          node);
    }
  }

  void check_entries(std::uint64_t entries, long long node = -1) const {
    if (entries > budget_.max_table_entries) {
      throw ResourceError("table entry budget exceeded (" +
                              std::to_string(entries) + " > " +
                              std::to_string(budget_.max_table_entries) +
                              node_suffix(node),
                          node);
    }
  }

  std::uint64_t work_used() const { return work_used_; }
  const EvalBudget& budget() const { return budget_; }

 private:
  static std::string node_suffix(long long node) {
    if (node < 0) return ")";
    return ") at node " + std::to_string(node);
  }

  EvalBudget budget_;
  std::uint64_t work_used_ = 0;
};

}  // namespace mlmkit
