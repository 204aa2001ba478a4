#include "hooksph/invariant_oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "hooksph/errors.hpp"

namespace hooksph {

namespace {

// Calls fn(choice) for every vector picking one position from each listed block.
template <class Fn>
void for_each_choice(const BlockStructure& blocks, const std::vector<int>& labels, Fn&& fn) {
  std::vector<int> choice(labels.size());
  for (std::size_t r = 0; r < labels.size(); ++r) choice[r] = blocks.first(labels[r]);
  while (true) {
    fn(std::as_const(choice));
    std::size_t r = labels.size();
    while (r > 0) {
      --r;
      if (choice[r] < blocks.interval(labels[r]).last) {
        ++choice[r];
        break;
      }
      choice[r] = blocks.first(labels[r]);
      if (r == 0) return;
    }
    if (labels.empty()) return;
  }
}

// All m-subsets of [0, n) in lexicographic order.
std::vector<std::vector<int>> subsets(int n, int m) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == m) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i < n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

Rational delta_value(std::span<const Rational> vals) {
  Rational v(1);
  for (std::size_t j = 0; j < vals.size(); ++j)
    for (std::size_t k = j + 1; k < vals.size(); ++k) v *= vals[j] - vals[k];
  return v;
}

}  // namespace

MultivariatePoly delta(int nvars, std::span<const int> positions) {
  std::vector<int> sorted(positions.begin(), positions.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("delta: repeated position");
  for (int s : sorted)
    if (s < 0 || s >= nvars) throw std::invalid_argument("delta: position out of range");

  MultivariatePoly result = MultivariatePoly::constant(nvars, Rational(1));
  for (std::size_t j = 0; j < positions.size(); ++j)
    for (std::size_t k = j + 1; k < positions.size(); ++k)
      result = result * (MultivariatePoly::variable(nvars, positions[j]) - MultivariatePoly::variable(nvars, positions[k]));
  return result;
}

std::vector<InvariantElement> xi_basis(const HookShape& shape, const BlockStructure& blocks) {
  if (shape.n != blocks.total()) throw std::invalid_argument("xi_basis: N mismatch");
  const int p = blocks.block_count();
  const int m = p - shape.b - 1;
  if (m < 0) throw NoInvariantsError(shape.b, p);

  std::vector<InvariantElement> basis;
  for (auto& omitted : subsets(p - 1, m)) {
    std::vector<int> labels;
    for (int j = 0; j < p - 1; ++j)
      if (!std::binary_search(omitted.begin(), omitted.end(), j)) labels.push_back(j);
    labels.push_back(p - 1);
    MultivariatePoly xi(shape.n);
    for_each_choice(blocks, labels, [&](const std::vector<int>& choice) { xi += delta(shape.n, choice); });
    basis.push_back({InvariantLabel{std::move(omitted)}, std::move(xi)});
  }
  return basis;
}

MultivariatePoly symmetrize(const MultivariatePoly& f, const BlockStructure& blocks) {
  if (f.variable_count() != blocks.total()) throw std::invalid_argument("symmetrize: N mismatch");
  const YoungSubgroup group(blocks);
  MultivariatePoly sum(f.variable_count());
  for (const auto& h : group) sum += f.permuted(h);
  sum *= Rational(mpz_class(1), mpz_class(static_cast<unsigned long>(group.order())));
  return sum;
}

GramTrace gram_trace(const HookShape& shape, const BlockStructure& blocks, const Permutation& g,
                     const MonomialWeight& weight) {
  if (g.size() != shape.n) throw std::invalid_argument("gram_trace: N mismatch");
  const auto basis = xi_basis(shape, blocks);
  const std::size_t mu = basis.size();

  std::vector<MultivariatePoly> moved;
  std::vector<MultivariatePoly> projected;
  moved.reserve(mu);
  for (const auto& el : basis) {
    moved.push_back(el.poly.permuted(g));
    projected.push_back(symmetrize(moved.back(), blocks));
  }

  GramTrace out{Matrix(mu, mu), Matrix(mu, mu), Matrix(), Rational(0), Rational(0)};
  Matrix projected_transfer(mu, mu);
  for (std::size_t i = 0; i < mu; ++i)
    for (std::size_t j = 0; j < mu; ++j) {
      out.gram(i, j) = inner_product(basis[i].poly, basis[j].poly, weight);
      out.transfer(i, j) = inner_product(moved[j], basis[i].poly, weight);
      projected_transfer(i, j) = inner_product(projected[j], basis[i].poly, weight);
    }

  out.trace_t_minv = (out.transfer * inverse(out.gram)).trace();
  out.expansion = solve(out.gram.transposed(), projected_transfer);

  for (std::size_t i = 0; i < mu; ++i) {
    MultivariatePoly residual = projected[i];
    for (std::size_t j = 0; j < mu; ++j) residual -= basis[j].poly * out.expansion(j, i);
    if (!residual.is_zero())
      throw std::logic_error("rho g xi is not in the span of the invariant basis (residual " + residual.str() + ")");
  }
  out.trace_b = out.expansion.trace();
  return out;
}

Rational spherical_via_gram(const HookShape& shape, const BlockStructure& blocks, const Permutation& g,
                            const MonomialWeight& weight) {
  return gram_trace(shape, blocks, g, weight).trace_t_minv;
}

Rational character_via_alternating(const HookShape& shape, const Permutation& w) {
  return spherical_via_gram(shape, BlockStructure(std::vector<int>(static_cast<std::size_t>(shape.n), 1)), w);
}

bool check_alternating_sum(int b, std::span<const Rational> point) {
  if (b < 0 || static_cast<int>(point.size()) != b + 2) throw std::invalid_argument("check_alternating_sum: need b+2 values");
  Rational total(0);
  std::vector<Rational> rest;
  for (int j = 0; j < b + 2; ++j) {
    rest.clear();
    for (int i = 0; i < b + 2; ++i)
      if (i != j) rest.push_back(point[static_cast<std::size_t>(i)]);
    // 1-based sign (-1)^{j+1}
    if (j % 2 == 0) total -= delta_value(rest);
    else total += delta_value(rest);
  }
  return total.is_zero();
}

MultivariatePoly alternating_sum_polynomial(int b) {
  const int n = b + 2;
  MultivariatePoly total(n);
  std::vector<int> rest;
  for (int j = 0; j < n; ++j) {
    rest.clear();
    for (int i = 0; i < n; ++i)
      if (i != j) rest.push_back(i);
    if (j % 2 == 0) total -= delta(n, rest);
    else total += delta(n, rest);
  }
  return total;
}

std::vector<Rational> jucys_murphy_expected(int n, int b) {
  std::vector<Rational> c;
  for (int i = 1; i <= n; ++i) c.emplace_back(i <= b + 1 ? 1 - i : i - b - 1);
  return c;
}

std::vector<std::optional<Rational>> jucys_murphy_eigenvalues(int n, int b) {
  if (b < 0 || b + 1 > n) throw std::invalid_argument("jucys_murphy: need 0 <= b <= N-1");
  std::vector<int> first(static_cast<std::size_t>(b + 1));
  for (int i = 0; i <= b; ++i) first[static_cast<std::size_t>(i)] = i;
  const MultivariatePoly f = delta(n, first);
  const auto& [lead_exps, lead_coef] = *f.terms().begin();

  std::vector<std::optional<Rational>> out;
  for (int j = 0; j < n; ++j) {
    MultivariatePoly image(n);
    for (int i = 0; i < j; ++i) image += f.permuted(Permutation::transposition(n, i, j));
    const Rational c = image.coefficient(lead_exps) / lead_coef;
    if (image == f * c) out.emplace_back(c);
    else out.emplace_back(std::nullopt);
  }
  return out;
}

bool check_jucys_murphy(int n, int b) {
  const auto got = jucys_murphy_eigenvalues(n, b);
  const auto want = jucys_murphy_expected(n, b);
  for (std::size_t i = 0; i < got.size(); ++i)
    if (!got[i] || *got[i] != want[i]) return false;
  return true;
}

MultivariatePoly label_orbit_sum(const BlockStructure& blocks, std::span<const int> positions) {
  const int n = blocks.total();
  std::vector<int> labels;
  Rational weight(1);
  for (int s : positions) {
    labels.push_back(blocks.block_of(s));
    weight /= Rational(blocks.size(labels.back()));
  }
  MultivariatePoly sum(n);
  for_each_choice(blocks, labels, [&](const std::vector<int>& choice) {
    std::vector<int> sorted = choice;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end()) sum += delta(n, choice);
  });
  return sum * weight;
}

}  // namespace hooksph
