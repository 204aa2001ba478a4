#include "hooksph/verify.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <random>
#include <stdexcept>

#include "hooksph/dunkl.hpp"
#include "hooksph/errors.hpp"
#include "hooksph/hook_character.hpp"
#include "hooksph/invariant_oracle.hpp"
#include "hooksph/kappa_poly.hpp"
#include "hooksph/spherical.hpp"
#include "hooksph/symfunc.hpp"

namespace hooksph {

using nlohmann::json;

namespace {

std::string join(const std::vector<int>& v, int offset = 0) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i] + offset);
  }
  return out;
}

json describe(const GridInstance& inst) {
  return json{{"b", inst.b},
              {"blocks", join(inst.blocks)},
              {"support", join(inst.support, 1)},
              {"replay", replay_command(inst)}};
}

SphericalQuery to_query(const GridInstance& inst) {
  return SphericalQuery{inst.b, BlockStructure(inst.blocks), SupportSet(inst.support)};
}

unsigned long long group_order(const std::vector<int>& sizes) {
  unsigned long long order = 1;
  for (int n : sizes)
    for (int i = 2; i <= n; ++i) order *= static_cast<unsigned long long>(i);
  return order;
}

void block_lists(int p, int max_n, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == p) {
    out.push_back(cur);
    return;
  }
  for (int n = 1; n <= max_n; ++n) {
    cur.push_back(n);
    block_lists(p, max_n, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<int>> nonempty_subsets(int p) {
  std::vector<std::vector<int>> out;
  for (unsigned mask = 1; mask < (1u << p); ++mask) {
    std::vector<int> s;
    for (int j = 0; j < p; ++j)
      if (mask & (1u << j)) s.push_back(j);
    out.push_back(std::move(s));
  }
  return out;
}

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-20, 20);
  std::uniform_int_distribution<long> den(1, 9);
  return Rational(num(rng), den(rng));
}

std::vector<Rational> support_sizes_minus_one(const SphericalQuery& q) {
  std::vector<Rational> out;
  for (int a : q.support.members()) out.emplace_back(q.blocks.size(a) - 1);
  return out;
}

Rational support_product(const SphericalQuery& q) {
  Rational pi(1);
  for (int a : q.support.members()) pi *= Rational(q.blocks.size(a));
  return pi;
}

CheckReport report(std::string id, std::string title) {
  CheckReport r;
  r.id = std::move(id);
  r.title = std::move(title);
  return r;
}

Rational sign_pow(int e) { return e % 2 == 0 ? Rational(1) : Rational(-1); }

// Values from the case-by-case theorems, each stated only on its own range.
// Returns every formula that applies to q, labelled.
std::vector<std::pair<std::string, Rational>> special_case_values(const SphericalQuery& q) {
  std::vector<std::pair<std::string, Rational>> out;
  const int b = q.b, m = q.m(), ell = q.ell(), p = q.p();
  const auto shifted = support_sizes_minus_one(q);
  const Rational pi = support_product(q);
  auto e = [&](int j) { return j < 0 ? Rational(0) : elem_sym<Rational>(static_cast<std::size_t>(j), shifted); };

  if (m == 0 && ell >= 2)
    out.emplace_back("p=b+1", (e(ell) + sign_pow(ell - 1)) / pi);
  if (m == 1 && ell >= 2 && ell <= b + 1)
    out.emplace_back("p=b+2,l<=b+1", (Rational(b + 1) * e(ell) + e(ell - 1) + sign_pow(ell - 1) * Rational(b - ell + 1)) / pi);
  if (m == 1 && ell == b + 2)
    out.emplace_back("p=b+2,l=b+2", (Rational(ell - 1) * e(ell) + e(ell - 1) + sign_pow(b)) / pi);
  if (ell == p && ell >= 2) {
    Rational sum(0);
    for (int k = 0; k <= m; ++k)
      sum += pochhammer(Rational(b + 1), static_cast<unsigned>(m - k)) / factorial(static_cast<unsigned>(m - k)) * e(ell - k);
    out.emplace_back("l=p", (sum + sign_pow(b)) / pi);
  }
  if (b == 1 && ell >= 2) {
    Rational v(p - 1);
    for (int a : q.support.members()) v -= Rational(1, q.blocks.size(a));
    out.emplace_back("b=1", v);
  }
  const bool singletons = std::all_of(q.blocks.sizes().begin(), q.blocks.sizes().end(), [](int n) { return n == 1; });
  if (singletons && ell >= 2) {
    Rational tail = sign_pow(ell + 1) * pochhammer(Rational(b - ell + 1), static_cast<unsigned>(m)) /
                    factorial(static_cast<unsigned>(m));
    Rational v = tail;
    if (ell <= m) v += pochhammer(Rational(b + 1), static_cast<unsigned>(m - ell)) / factorial(static_cast<unsigned>(m - ell));
    out.emplace_back("n_i=1", v);
    std::vector<int> ct{ell};
    ct.insert(ct.end(), static_cast<std::size_t>(q.n() - ell), 1);
    out.emplace_back("n_i=1 character", hook_character(HookShape(q.n(), b), CycleType(ct)));
    if (m == 0) out.emplace_back("sign", sign_pow(ell + 1));
  }
  return out;
}

}  // namespace

void CheckReport::record(bool ok, const std::function<json()>& describe_failure) {
  ++checked;
  if (ok) return;
  ++failed;
  if (!counterexample) counterexample = describe_failure();
}

json CheckReport::to_json() const {
  json j{{"id", id}, {"title", title}, {"checked", checked}, {"failed", failed}, {"passed", passed()}, {"details", details}};
  if (counterexample) j["counterexample"] = *counterexample;
  return j;
}

std::vector<GridInstance> spherical_grid(const VerifyCaps& caps) {
  std::vector<GridInstance> out;
  for (int p = 1; p <= caps.max_p; ++p) {
    std::vector<std::vector<int>> lists;
    std::vector<int> cur;
    block_lists(p, caps.max_n, cur, lists);
    const auto supports = nonempty_subsets(p);
    for (const auto& blocks : lists) {
      if (group_order(blocks) > caps.max_group_order) continue;
      for (int b = 0; b <= caps.max_b && p - b - 1 >= 0; ++b)
        for (const auto& a : supports) out.push_back({b, blocks, a});
    }
  }
  return out;
}

std::string replay_command(const GridInstance& inst) {
  return "hooksph spherical --b " + std::to_string(inst.b) + " --blocks " + join(inst.blocks) + " --support " +
         join(inst.support, 1) + " --method all";
}

CheckReport check_closed_vs_bruteforce(const VerifyCaps& caps) {
  CheckReport r = report("C1", "closed form (big2) = brute-force subgroup average");
  for (const auto& inst : spherical_grid(caps)) {
    const auto q = to_query(inst);
    const Rational closed = spherical_big2(q);
    const Rational brute =
        spherical_bruteforce(HookShape(q.n(), q.b), q.blocks, support_cycle(q.blocks, q.support));
    r.record(closed == brute, [&] {
      auto j = describe(inst);
      j["closed"] = closed.str();
      j["bruteforce"] = brute.str();
      return j;
    });
  }
  return r;
}

CheckReport check_big1_vs_big2(const VerifyCaps& caps) {
  CheckReport r = report("C2", "product form (big1) = reciprocal form (big2)");
  std::size_t grid = 0;
  for (const auto& inst : spherical_grid(caps)) {
    if (inst.support.size() < 2) continue;
    const auto q = to_query(inst);
    const Rational v1 = spherical_big1(q), v2 = spherical_big2(q);
    ++grid;
    r.record(v1 == v2, [&] {
      auto j = describe(inst);
      j["big1"] = v1.str();
      j["big2"] = v2.str();
      return j;
    });
  }

  std::mt19937_64 rng(caps.seed);
  for (int t = 0; t < caps.random_instances; ++t) {
    const int p = std::uniform_int_distribution<int>(2, caps.random_max_p)(rng);
    std::vector<int> blocks(static_cast<std::size_t>(p));
    for (int& n : blocks) n = std::uniform_int_distribution<int>(1, caps.random_max_n)(rng);
    const int b = std::uniform_int_distribution<int>(0, p - 1)(rng);
    std::vector<int> order(static_cast<std::size_t>(p));
    for (int j = 0; j < p; ++j) order[static_cast<std::size_t>(j)] = j;
    std::shuffle(order.begin(), order.end(), rng);
    const int ell = std::uniform_int_distribution<int>(2, p)(rng);
    std::vector<int> support(order.begin(), order.begin() + ell);
    const GridInstance inst{b, blocks, support};
    const auto q = to_query(inst);
    const Rational v1 = spherical_big1(q), v2 = spherical_big2(q);
    r.record(v1 == v2, [&] {
      auto j = describe(inst);
      j["big1"] = v1.str();
      j["big2"] = v2.str();
      return j;
    });
  }
  r.details = {{"grid_instances", grid}, {"random_instances", caps.random_instances}, {"seed", caps.seed}};
  return r;
}

CheckReport check_gram_trace(const VerifyCaps& caps) {
  CheckReport r = report("C3", "tr(T M^-1) = tr(B) = closed form on the Gram oracle grid");
  for (const auto& inst : spherical_grid(caps)) {
    const auto q = to_query(inst);
    if (q.n() > caps.gram_max_total) continue;
    const Rational closed = spherical_big2(q);
    const auto gt = gram_trace(HookShape(q.n(), q.b), q.blocks, support_cycle(q.blocks, q.support));
    r.record(gt.trace_t_minv == closed && gt.trace_b == closed, [&] {
      auto j = describe(inst);
      j["closed"] = closed.str();
      j["trace_t_minv"] = gt.trace_t_minv.str();
      j["trace_b"] = gt.trace_b.str();
      return j;
    });
  }
  return r;
}

CheckReport check_basis_cardinality(const VerifyCaps& caps) {
  CheckReport r = report("C4", "invariant basis has binom(b+m,b) elements and a nonsingular Gram matrix");
  std::vector<std::pair<int, std::vector<int>>> seen;
  for (const auto& inst : spherical_grid(caps)) {
    if (std::find(seen.begin(), seen.end(), std::make_pair(inst.b, inst.blocks)) != seen.end()) continue;
    seen.emplace_back(inst.b, inst.blocks);
    const BlockStructure blocks(inst.blocks);
    if (blocks.total() > caps.gram_max_total) continue;
    const auto basis = xi_basis(HookShape(blocks.total(), inst.b), blocks);
    Matrix gram(basis.size(), basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = 0; j < basis.size(); ++j) gram(i, j) = inner_product(basis[i].poly, basis[j].poly);
    const Rational expected = invariant_multiplicity(inst.b, blocks.block_count());
    const Rational det = determinant(gram);
    r.record(Rational(static_cast<long>(basis.size())) == expected && !det.is_zero(), [&] {
      return json{{"b", inst.b}, {"blocks", join(inst.blocks)}, {"basis_size", basis.size()},
                  {"expected", expected.str()}, {"gram_determinant", det.str()}};
    });
  }
  return r;
}

CheckReport check_special_cases(const VerifyCaps& caps) {
  CheckReport r = report("C5", "case-by-case theorems reproduced by the closed form and the brute-force average");
  std::map<std::string, std::size_t> counts;
  for (const auto& inst : spherical_grid(caps)) {
    const auto q = normalize_support(to_query(inst));
    const auto cases = special_case_values(q);
    if (cases.empty()) continue;
    const Rational closed = spherical_big2(q);
    const Rational brute = spherical_bruteforce(HookShape(q.n(), q.b), q.blocks, support_cycle(q.blocks, q.support));
    for (const auto& [label, value] : cases) {
      ++counts[label];
      r.record(value == closed && value == brute, [&] {
        auto j = describe(inst);
        j["case"] = label;
        j["case_value"] = value.str();
        j["closed"] = closed.str();
        j["bruteforce"] = brute.str();
        return j;
      });
    }
  }
  r.details["cases"] = counts;
  for (const char* needed : {"p=b+1", "p=b+2,l=b+2", "l=p", "b=1", "n_i=1", "n_i=1 character", "sign"})
    if (counts[needed] == 0)
      r.record(false, [&] { return json{{"missing_case", needed}}; });
  return r;
}

CheckReport check_identities(const VerifyCaps& caps) {
  CheckReport r = report("C6", "alternating-sum, Jucys-Murphy, projection and symmetric-function identities");
  std::mt19937_64 rng(caps.seed + 6);
  std::size_t alt_sum = 0, jm = 0, idem = 0, symf = 0;

  for (int b = 0; b <= caps.alternating_sum_max_b; ++b) {
    for (int t = 0; t < caps.alternating_sum_points; ++t) {
      std::vector<Rational> point;
      while (static_cast<int>(point.size()) < b + 2) {
        Rational v = random_rational(rng);
        if (std::find(point.begin(), point.end(), v) == point.end()) point.push_back(v);
      }
      ++alt_sum;
      r.record(check_alternating_sum(b, point), [&] {
        json pt = json::array();
        for (const auto& v : point) pt.push_back(v.str());
        return json{{"identity", "alternating_sum"}, {"b", b}, {"point", pt}};
      });
    }
    ++alt_sum;
    r.record(alternating_sum_polynomial(b).is_zero(), [&] { return json{{"identity", "alternating sum polynomial"}, {"b", b}}; });
  }

  for (int n = 1; n <= caps.jucys_murphy_max_n; ++n)
    for (int b = 0; b <= std::min(caps.jucys_murphy_max_b, n - 1); ++b) {
      ++jm;
      r.record(check_jucys_murphy(n, b), [&] { return json{{"identity", "jucys-murphy"}, {"N", n}, {"b", b}}; });
    }

  const std::vector<std::vector<int>> idem_blocks{{2, 1}, {2, 2}, {3, 1}, {1, 2, 2}, {3, 2}, {2, 1, 1, 1}};
  for (const auto& sizes : idem_blocks) {
    const BlockStructure blocks(sizes);
    const int n = blocks.total();
    for (int t = 0; t < caps.idempotence_samples; ++t) {
      MultivariatePoly f(n);
      const int terms = std::uniform_int_distribution<int>(1, 5)(rng);
      for (int s = 0; s < terms; ++s) {
        Exponents e(static_cast<std::size_t>(n), 0);
        for (auto& v : e) v = static_cast<std::uint16_t>(std::uniform_int_distribution<int>(0, 2)(rng));
        f.add_term(e, random_rational(rng));
      }
      const auto once = symmetrize(f, blocks);
      const auto twice = symmetrize(once, blocks);
      bool invariant = true;
      for (const auto& h : YoungSubgroup(blocks)) invariant = invariant && once.permuted(h) == once;
      ++idem;
      r.record(once == twice && invariant, [&] {
        return json{{"identity", "rho idempotent"}, {"blocks", join(sizes)}, {"f", f.str()}};
      });
    }
  }

  for (int t = 0; t < caps.symfunc_samples; ++t) {
    const int len = std::uniform_int_distribution<int>(0, 6)(rng);
    std::vector<Rational> c;
    for (int i = 0; i < len; ++i) {
      Rational v = random_rational(rng);
      if (v.is_zero()) v = Rational(1, 7);
      c.push_back(v);
    }
    auto dump = [&] {
      json arr = json::array();
      for (const auto& v : c) arr.push_back(v.str());
      return arr;
    };
    // prod (1 + c_i t) expanded as a polynomial in t
    KappaPoly gen_e(1);
    for (const auto& v : c) gen_e *= KappaPoly{Rational(1), v};
    bool ok = true;
    for (int k = 0; k <= len + 1; ++k) ok = ok && elem_sym<Rational>(static_cast<std::size_t>(k), c) == gen_e.coefficient(static_cast<std::size_t>(k));
    ++symf;
    r.record(ok, [&] { return json{{"identity", "e generating function"}, {"values", dump()}}; });

    // degree-K truncation of prod (1 - c_i t)^{-1}
    const int big_k = 5;
    std::vector<Rational> series(big_k + 1);
    series[0] = Rational(1);
    for (const auto& v : c) {
      std::vector<Rational> next(big_k + 1);
      for (int a = 0; a <= big_k; ++a)
        for (int j = 0; a + j <= big_k; ++j) next[static_cast<std::size_t>(a + j)] += series[static_cast<std::size_t>(a)] * pow(v, static_cast<unsigned>(j));
      series = std::move(next);
    }
    ok = true;
    for (int k = 0; k <= big_k; ++k) ok = ok && complete_sym<Rational>(static_cast<std::size_t>(k), c) == series[static_cast<std::size_t>(k)];
    ++symf;
    r.record(ok, [&] { return json{{"identity", "h generating function"}, {"values", dump()}}; });

    ok = true;
    for (int k = 1; k <= len; ++k) {
      Rational s(0);
      for (int i = 0; i <= k; ++i)
        s += sign_pow(i) * elem_sym<Rational>(static_cast<std::size_t>(i), c) * complete_sym<Rational>(static_cast<std::size_t>(k - i), c);
      ok = ok && s.is_zero();
    }
    ++symf;
    r.record(ok, [&] { return json{{"identity", "newton e/h"}, {"values", dump()}}; });

    std::vector<Rational> inv;
    Rational prod(1);
    for (const auto& v : c) {
      inv.push_back(inverse(v));
      prod *= v;
    }
    ok = true;
    for (int k = 0; k <= len; ++k)
      ok = ok && prod * elem_sym<Rational>(static_cast<std::size_t>(k), inv) == elem_sym<Rational>(static_cast<std::size_t>(len - k), c);
    ++symf;
    r.record(ok, [&] { return json{{"identity", "e reflection"}, {"values", dump()}}; });
  }

  r.details = {{"alternating_sum", alt_sum}, {"jucys_murphy", jm}, {"idempotence", idem}, {"symmetric_functions", symf}};
  return r;
}

std::vector<DegreeProfile> profiles_up_to(int max_n, int max_degree) {
  std::vector<DegreeProfile> out;
  // multiplicity compositions of N, then strictly decreasing degree choices
  for (int n = 1; n <= max_n; ++n)
    for (int p = 1; p <= n; ++p) {
      std::vector<std::vector<int>> mults;
      std::vector<int> cur;
      block_lists(p, n, cur, mults);
      for (const auto& ms : mults) {
        int sum = 0;
        for (int v : ms) sum += v;
        if (sum != n) continue;
        std::vector<int> degs(static_cast<std::size_t>(p));
        auto rec = [&](auto&& self, int j, int upper, int used) -> void {
          if (j == p) {
            std::vector<DegreeProfile::Part> parts;
            for (int t = 0; t < p; ++t) parts.push_back({degs[static_cast<std::size_t>(t)], ms[static_cast<std::size_t>(t)]});
            out.emplace_back(std::move(parts));
            return;
          }
          const int remaining_parts = p - j - 1;
          for (int d = remaining_parts; d <= upper; ++d) {
            const int cost = used + d * ms[static_cast<std::size_t>(j)];
            if (cost > max_degree) break;
            degs[static_cast<std::size_t>(j)] = d;
            self(self, j + 1, d - 1, cost);
          }
        };
        rec(rec, 0, max_degree, 0);
      }
    }
  return out;
}

CheckReport check_eigsum_arbitration(const VerifyCaps& caps) {
  CheckReport r = report("C7", "eigenvalue-sum formula vs Dunkl-operator isotype trace (normalization arbitration)");
  const std::vector<Rational> kappas{Rational(1, 3), Rational(-2, 5), Rational(2), Rational(7, 4), Rational(-3)};
  std::size_t instances = 0, plain_ok = 0, printed_ok = 0, distinct = 0, distinct_both = 0;
  std::optional<json> plain_miss, printed_miss;

  for (const auto& profile : profiles_up_to(caps.eigsum_max_n, caps.eigsum_max_degree)) {
    const int p = profile.block_count();
    const bool all_distinct = std::all_of(profile.parts().begin(), profile.parts().end(),
                                          [](const auto& part) { return part.multiplicity == 1; });
    for (int b = 0; p - b - 1 >= 0; ++b)
      for (int k = 1; k <= caps.eigsum_max_k; ++k) {
        const auto plain = eigenvalue_sum(profile, b, k, Normalization::kPlainProduct).value;
        const auto printed = eigenvalue_sum(profile, b, k, Normalization::kAsPrinted).value;
        bool plain_match = plain.degree() <= k, printed_match = printed.degree() <= k;
        json samples = json::array();
        for (int s = 0; s < k + 2; ++s) {
          const Rational& k0 = kappas[static_cast<std::size_t>(s)];
          const Rational oracle = isotype_trace(profile, b, k, k0);
          plain_match = plain_match && plain.eval(k0) == oracle;
          printed_match = printed_match && printed.eval(k0) == oracle;
          samples.push_back({{"kappa", k0.str()}, {"oracle", oracle.str()}, {"plain", plain.eval(k0).str()},
                             {"as_printed", printed.eval(k0).str()}});
        }
        ++instances;
        plain_ok += plain_match;
        printed_ok += printed_match;
        auto where = [&] {
          return json{{"profile", profile.str()}, {"b", b}, {"k", k}, {"samples", samples},
                      {"replay", "hooksph eigsum --profile " + profile.str() + " --b " + std::to_string(b) +
                                     " --k " + std::to_string(k)}};
        };
        if (!plain_match && !plain_miss) plain_miss = where();
        if (!printed_match && !printed_miss) printed_miss = where();
        // every instance must be matched by at least one variant
        r.record(plain_match || printed_match, where);
        if (all_distinct) {
          ++distinct;
          distinct_both += plain_match && printed_match;
          r.record(plain_match && printed_match, where);
        }
      }
  }

  std::optional<Normalization> certified;
  if (plain_ok == instances && printed_ok < instances) certified = Normalization::kPlainProduct;
  if (printed_ok == instances && plain_ok < instances) certified = Normalization::kAsPrinted;
  r.record(certified.has_value(), [&] {
    json j{{"reason", "no single normalization matches every instance while the other fails somewhere"},
           {"plain_matches", plain_ok}, {"as_printed_matches", printed_ok}, {"instances", instances}};
    if (plain_miss) j["first_plain_miss"] = *plain_miss;
    if (printed_miss) j["first_as_printed_miss"] = *printed_miss;
    return j;
  });
  r.details = {{"instances", instances},
               {"plain_matches", plain_ok},
               {"as_printed_matches", printed_ok},
               {"all_distinct_instances", distinct},
               {"all_distinct_both_match", distinct_both},
               {"certified", certified ? json(to_string(*certified)) : json(nullptr)}};
  if (printed_miss) r.details["first_as_printed_miss"] = *printed_miss;
  if (plain_miss) r.details["first_plain_miss"] = *plain_miss;
  return r;
}

std::optional<Normalization> certified_normalization(const CheckReport& arbitration) {
  const auto it = arbitration.details.find("certified");
  if (it == arbitration.details.end() || !it->is_string()) return std::nullopt;
  return parse_normalization(it->get<std::string>());
}

CheckReport check_operator_facts(const VerifyCaps& caps) {
  CheckReport r = report("C8", "P_k on the symmetric line (eigenvalue N d^k) and the Euler-power form at kappa = 0");
  const std::vector<Rational> kappas{Rational(0), Rational(1, 2), Rational(-3, 4), Rational(5)};
  for (int n = 1; n <= caps.facts_max_n; ++n)
    for (int d = 0; d <= caps.facts_max_d; ++d)
      for (int k = 1; k <= caps.facts_max_k; ++k)
        for (const auto& k0 : kappas) {
          const DegreeProfile profile({{d, n}});
          const Rational got = isotype_trace(profile, 0, k, k0);
          const Rational want = Rational(n) * pow(Rational(d), static_cast<unsigned>(k));
          r.record(got == want, [&] {
            return json{{"profile", profile.str()}, {"k", k}, {"kappa", k0.str()}, {"isotype_trace", got.str()},
                        {"expected", want.str()}};
          });
        }

  for (int n = 1; n <= caps.facts_max_n; ++n)
    for (int degree = 0; degree <= 4; ++degree) {
      const MonomialSpace space(n, degree);
      for (int k = 1; k <= caps.facts_max_k; ++k) {
        const auto pk = pk_matrix(space, k, Rational(0));
        bool ok = pk.is_diagonal();
        for (std::size_t i = 0; ok && i < space.dimension(); ++i) {
          long euler = 0;
          for (int e : space.exponents(i)) {
            long term = 1;
            for (int t = 0; t < k; ++t) term *= e;
            euler += term;
          }
          ok = pk(i, i) == Rational(euler);
        }
        r.record(ok, [&] { return json{{"N", n}, {"degree", degree}, {"k", k}, {"fact", "P_k(kappa=0) diagonal Euler power"}}; });
      }
    }
  return r;
}

VerifySuite parse_suite(const std::string& text) {
  if (text == "spherical") return VerifySuite::kSpherical;
  if (text == "identities") return VerifySuite::kIdentities;
  if (text == "eigsum") return VerifySuite::kEigsum;
  if (text == "all") return VerifySuite::kAll;
  throw ParseError("suite must be one of spherical, identities, eigsum, all");
}

std::vector<CheckReport> run_suite(VerifySuite suite, const VerifyCaps& caps) {
  using Check = CheckReport (*)(const VerifyCaps&);
  std::vector<Check> checks;
  const bool all = suite == VerifySuite::kAll;
  if (all || suite == VerifySuite::kSpherical)
    checks.insert(checks.end(), {check_closed_vs_bruteforce, check_big1_vs_big2, check_gram_trace,
                                 check_basis_cardinality, check_special_cases});
  if (all || suite == VerifySuite::kIdentities) checks.push_back(check_identities);
  if (all || suite == VerifySuite::kEigsum) checks.insert(checks.end(), {check_eigsum_arbitration, check_operator_facts});

  std::vector<std::future<CheckReport>> running;
  for (Check c : checks) running.push_back(std::async(std::launch::async, c, std::cref(caps)));
  std::vector<CheckReport> out;
  for (auto& f : running) out.push_back(f.get());
  return out;
}

}  // namespace hooksph
