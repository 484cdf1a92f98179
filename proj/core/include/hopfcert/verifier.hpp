#pragma once

// Certificate-producing commands. Each returns a Report whose verdicts are deterministic for
// a fixed seed, independent of the thread count.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

#include "hopfcert/hopf.hpp"
#include "hopfcert/rep.hpp"
#include "hopfcert/series.hpp"

namespace hopfcert {

using json = nlohmann::json;

enum class Status { Pass, Fail, Assumption, Note };
std::string to_string(Status s);

struct Verdict {
  std::string check;
  Status status = Status::Note;
  std::string summary;
  json evidence = json::object();
};

struct Report {
  std::string command;
  std::string instance;
  std::string field;
  std::uint64_t seed = 0;
  std::vector<Verdict> verdicts;
  /// Object produced by the command (build), otherwise null.
  json artifact;
  /// Wall time; only rendered when set.
  std::optional<double> seconds;

  Verdict& add(std::string check, Status status, std::string summary, json evidence = json::object());
  /// 1 if any verdict failed, else 3 if an assumption is violated, else 0.
  int exit_code() const;
  bool passed() const { return exit_code() == 0; }
  const Verdict* find(const std::string& check) const;
  json to_json() const;
  std::string to_text() const;
};

struct VerifyOptions {
  std::uint64_t seed = 0x5eed;
  /// Cross-check chop results against exhaustive submodule search where feasible.
  bool oracle = false;
  unsigned threads = 1;
};

/// Per-task seed.
inline std::uint64_t task_seed(std::uint64_t seed, std::size_t index) { return seed ^ index; }

/// fn(0..n-1) on up to `threads` workers; results in index order. The exception of the
/// lowest failing index is rethrown.
template <class F>
auto parallel_map(std::size_t n, unsigned threads, F&& fn) -> std::vector<decltype(fn(std::size_t{0}))> {
  using R = decltype(fn(std::size_t{0}));
  std::vector<std::optional<R>> slots(n);
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        slots[i].emplace(fn(i));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t workers = std::min<std::size_t>(std::max(1u, threads), n);
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(worker);
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  std::vector<R> out;
  out.reserve(n);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

struct Built {
  HopfPtr hopf;         // null for algebra-only constructions
  AlgebraPtr algebra;
  json object;
};

/// Recipe keys: construct (group_algebra | dual_group_algebra | bicrossproduct | smash_algebra | dual),
/// group, field, and per construct F / Q (bicrossproduct), subgroup and optional coalgebra
/// (smash_algebra), of (dual).
Built build_recipe(const json& recipe, const std::optional<Field>& field_override = std::nullopt);
/// A recipe (object with "construct") or a Hopf algebra file, validated.
HopfPtr load_hopf(const json& j, const std::optional<Field>& field_override = std::nullopt);
std::string instance_name(const Hopf& h);

Report cmd_build(const json& recipe, const VerifyOptions& opt, const std::optional<Field>& field_override = std::nullopt);
/// Parses and checks every algebra and Hopf axiom; malformed files throw InvalidInput.
Report cmd_check_hopf(const json& hopf_file, const VerifyOptions& opt);
Report cmd_series_check(HopfPtr h, const std::vector<Subspace>& chain, const VerifyOptions& opt);
Report cmd_frobenius_check(HopfPtr h, const std::vector<Subspace>& chain, const VerifyOptions& opt);
Report cmd_clifford_report(HopfPtr h, const Subspace& k, const VerifyOptions& opt);
/// `modules` are simple H-modules to test; when empty the simple factors of the regular module are used.
Report cmd_lies_over(HopfPtr h, const Subspace& k, const std::vector<Module>& modules, const VerifyOptions& opt);

}  // namespace hopfcert
