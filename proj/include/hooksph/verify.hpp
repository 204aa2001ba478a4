#ifndef HOOKSPH_VERIFY_HPP
#define HOOKSPH_VERIFY_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "hooksph/spectrum.hpp"

namespace hooksph {

// Bounds for the verification grids. Defaults are the acceptance bounds.
struct VerifyCaps {
  int max_b = 3;
  int max_p = 4;
  int max_n = 3;                                // largest block size n_i
  unsigned long long max_group_order = 3628800;  // 10!
  int gram_max_total = 7;                       // N cap for the Gram-trace oracle

  int random_instances = 500;
  int random_max_p = 8;
  int random_max_n = 20;
  std::uint64_t seed = 20250708;

  int alternating_sum_points = 100;
  int alternating_sum_max_b = 4;
  int jucys_murphy_max_n = 6;
  int jucys_murphy_max_b = 3;
  int idempotence_samples = 100;
  int symfunc_samples = 200;

  int eigsum_max_n = 4;
  int eigsum_max_degree = 5;
  int eigsum_max_k = 3;

  int facts_max_n = 4;
  int facts_max_d = 2;
  int facts_max_k = 3;
};

// Outcome of one verification family. `checked` counts individual exact
// comparisons; the first failure is kept with enough context to replay it.
struct CheckReport {
  std::string id;
  std::string title;
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::optional<nlohmann::json> counterexample;
  nlohmann::json details = nlohmann::json::object();

  bool passed() const noexcept { return checked > 0 && failed == 0; }
  void record(bool ok, const std::function<nlohmann::json()>& describe);
  nlohmann::json to_json() const;
};

// One grid instance: hook isotype b over blocks, support A (0-based).
struct GridInstance {
  int b;
  std::vector<int> blocks;
  std::vector<int> support;
};

// Every (b, blocks, A) with b <= max_b, 1 <= p <= max_p, 1 <= n_i <= max_n,
// m >= 0, prod n_i! <= max_group_order and A any nonempty subset of blocks.
std::vector<GridInstance> spherical_grid(const VerifyCaps& caps);

// Replay command for a spherical instance.
std::string replay_command(const GridInstance& inst);

CheckReport check_closed_vs_bruteforce(const VerifyCaps& caps);  // criterion 1
CheckReport check_big1_vs_big2(const VerifyCaps& caps);          // criterion 2
CheckReport check_gram_trace(const VerifyCaps& caps);            // criterion 3
CheckReport check_basis_cardinality(const VerifyCaps& caps);     // criterion 4
CheckReport check_special_cases(const VerifyCaps& caps);         // criterion 5
CheckReport check_identities(const VerifyCaps& caps);            // criterion 6
CheckReport check_eigsum_arbitration(const VerifyCaps& caps);    // criterion 7
CheckReport check_operator_facts(const VerifyCaps& caps);        // criterion 8

// The weight certified by the Dunkl-oracle arbitration, read from
// check_eigsum_arbitration's details ("certified"); nullopt when undecided.
std::optional<Normalization> certified_normalization(const CheckReport& arbitration);

// Degree profiles with N <= max_n and |lambda| <= max_degree.
std::vector<DegreeProfile> profiles_up_to(int max_n, int max_degree);

enum class VerifySuite { kSpherical, kIdentities, kEigsum, kAll };
VerifySuite parse_suite(const std::string& text);
std::vector<CheckReport> run_suite(VerifySuite suite, const VerifyCaps& caps);

}  // namespace hooksph

#endif
