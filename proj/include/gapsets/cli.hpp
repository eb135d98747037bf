#pragma once

// Command-line front end. The executable in tools/ forwards to run_cli; tests
// call it directly with captured streams.
//
// Exit codes: 0 success, 1 verification failure or OEIS mismatch, 2 usage
// error or invalid input.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "gapsets/gapset.hpp"

namespace gapsets::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

inline constexpr const char* kGapsetHeader = "genus,kappa,depth,multiplicity,frobenius,symmetry,gaps";
inline constexpr const char* kCountHeader = "genus,kappa,count";
inline constexpr const char* kSequenceHeader = "n,s_n,ratio_prev,ratio_cumsum";
inline constexpr const char* kReportHeader =
    "check,kind,lo,hi,evidence,status,instances,failures,counterexample";
inline constexpr const char* kOeisHeader = "id,index,computed,expected,status";

/// Largest genus an OEIS cross-check may enumerate.
inline constexpr int kMaxOeisGenus = 30;

struct OeisReference {
  std::string id;
  std::string description;
  /// Index of the first term.
  int offset = 0;
  std::vector<std::uint64_t> terms;
};

[[nodiscard]] const std::vector<OeisReference>& oeis_references();
/// Throws std::invalid_argument for an unknown id.
[[nodiscard]] const OeisReference& find_oeis(const std::string& id);
/// First `terms` values of the sequence, computed by enumeration. Throws
/// std::out_of_range when that needs genus above kMaxOeisGenus.
[[nodiscard]] std::vector<std::uint64_t> compute_oeis(const std::string& id, int terms);

/// One CSV gapset row (no trailing newline).
[[nodiscard]] std::string gapset_csv_row(const GapSet& g);
/// Parses a row produced by gapset_csv_row and revalidates the gap sequence.
/// Throws InvalidGapSet or std::invalid_argument.
[[nodiscard]] GapSet parse_gapset_csv_row(const std::string& line);

/// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gapsets::cli
