#pragma once

#include <cstdint>
#include <exception>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cmult/class_record.hpp"
#include "cmult/group_oracle.hpp"

namespace cmult::cli {

enum class Format { Json, Csv };

enum ExitCode : int {
  kOk = 0,
  kInternalError = 1,
  kPrecondition = 2,
  kCapBreach = 3,
  kParseError = 4,
};

inline constexpr std::uint64_t kScanGuard = 60;

struct ScanOptions {
  GroupKind kind = GroupKind::Sym;
  std::uint64_t n_from = 1;
  std::uint64_t n_to = 1;
  Format format = Format::Json;
  bool override_range = false;
};

struct FamilyOptions {
  std::uint64_t multiplicity = 1;
  std::optional<std::uint64_t> n;
  Format format = Format::Json;
};

enum class OracleAction { Classes, Report, Power };

struct OracleOptions {
  OracleAction action = OracleAction::Report;
  std::optional<std::string> gens_file;
  std::optional<std::uint64_t> psl2;
  std::optional<std::uint64_t> sym;
  std::optional<std::uint64_t> alt;
  std::optional<std::size_t> degree;
  std::optional<std::size_t> element_index;
  std::optional<std::string> element_cycles;
  std::size_t cap = kDefaultCap;
  Format format = Format::Json;
};

enum class NumbersAction { TotientCheck, DFact, Growth };

struct NumbersOptions {
  NumbersAction action = NumbersAction::TotientCheck;
  std::uint64_t k_max = 1;  // totient-check, growth
  std::uint64_t n = 0;      // dfact
  std::string a = "2";      // growth
  std::string c = "1";      // growth
  Format format = Format::Json;
};

/// Streams one report per n (JSON lines or CSV rows), flushing after each.
void cmd_scan(const ScanOptions& opts, std::ostream& out);
void cmd_family(const FamilyOptions& opts, std::ostream& out);
void cmd_oracle(const OracleOptions& opts, std::ostream& out);
void cmd_numbers(const NumbersOptions& opts, std::ostream& out);

int exit_code_for(const std::exception& e);

/// Full command-line entry point; never throws.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cmult::cli
