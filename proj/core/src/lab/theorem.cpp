#include "lrlab/lab/theorem.hpp"

#include <map>
#include <set>

#include "lab/linear.hpp"
#include "lrlab/constructions.hpp"
#include "lrlab/enumerate.hpp"
#include "lrlab/error.hpp"
#include "lrlab/power.hpp"
#include "lrlab/subdivision.hpp"

namespace lrlab::lab {

PropertyResult property_holds(const Partition& a, int n, int l) {
  if (a.length() > l) throw Error(Errc::IndexOutOfRange, "A has more than l parts");
  if (n < 1) throw Error(Errc::IndexOutOfRange, "exponent must be positive");
  PropertyResult result;
  result.n = n;
  const LRElement power = tensor_power(a, n, l);
  for (const Partition& b : dominated_partitions(scale(a, n), l)) {
    ++result.candidates;
    if (!power.contains(b)) {
      result.holds = false;
      result.counterexample = b;
      break;
    }
  }
  return result;
}

bool ExponentSearch::monotone() const {
  if (!threshold) return false;
  for (int n = 1; n < *threshold; ++n) {
    if (by_n[static_cast<std::size_t>(n - 1)].holds) return false;
  }
  return true;
}

ExponentSearch minimal_uniform_exponent(const Partition& a, int l, int n_max) {
  if (n_max < l) throw Error(Errc::IndexOutOfRange, "n_max must be at least l");
  ExponentSearch s;
  s.n_max = n_max;
  for (int n = 1; n <= n_max; ++n) s.by_n.push_back(property_holds(a, n, l));
  for (int n = n_max; n >= 1 && s.by_n[static_cast<std::size_t>(n - 1)].holds; --n) s.threshold = n;
  return s;
}

namespace {

using detail::Matrix;
using detail::Vector;

Vector as_vector(const Partition& p, int l) {
  Vector v;
  for (int x : p.padded(l)) v.emplace_back(x);
  return v;
}

Vector fractional(Vector v) {
  for (Rational& x : v) x -= detail::floor(x);
  return v;
}

// Fractional coordinates λ ∈ [0,1)^r of the group generated by the columns
// of sub⁻¹.
std::set<Vector> fractional_group(const Matrix& inv) {
  const std::size_t r = inv.size();
  std::vector<Vector> steps;
  for (std::size_t i = 0; i < r; ++i) {
    Vector col(r);
    for (std::size_t k = 0; k < r; ++k) col[k] = inv[k][i];
    steps.push_back(fractional(std::move(col)));
  }
  std::set<Vector> seen{Vector(r, Rational(0))};
  std::vector<Vector> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<Vector> next;
    for (const Vector& v : frontier) {
      for (const Vector& s : steps) {
        Vector w(r);
        for (std::size_t k = 0; k < r; ++k) w[k] = v[k] + s[k];
        w = fractional(std::move(w));
        if (seen.insert(w).second) next.push_back(std::move(w));
      }
    }
    frontier = std::move(next);
  }
  return seen;
}

}  // namespace

BoundDetails theorem_bound(const Partition& a, int l) {
  if (l < 1 || l > 3) throw Error(Errc::UnsupportedLength, "theorem_bound supports l <= 3");
  if (a.length() > l) throw Error(Errc::IndexOutOfRange, "A has more than l parts");
  BoundDetails out;
  const std::uint64_t big_l = lcm_upto(l);
  const std::uint64_t subdivisions = std::uint64_t{1} << (l - 1);
  if (a.weight() == 0) return out;

  std::vector<Vector> gens;
  for (const Subdivision& j : enumerate_subdivisions(l)) {
    Vector g = as_vector(build_G(a, j), l);
    bool dup = false;
    for (const Vector& h : gens) dup = dup || h == g;
    if (!dup) gens.push_back(std::move(g));
  }
  auto columns = [&](const std::vector<std::size_t>& idx) {
    Matrix m(static_cast<std::size_t>(l), Vector(idx.size()));
    for (std::size_t c = 0; c < idx.size(); ++c) {
      for (int row = 0; row < l; ++row) m[static_cast<std::size_t>(row)][c] = gens[idx[c]][static_cast<std::size_t>(row)];
    }
    return m;
  };
  std::vector<std::size_t> all(gens.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  const int r = detail::rank(columns(all));
  out.rank = r;

  std::set<std::vector<int>> phi;
  for (const auto& idx : detail::combinations(gens.size(), static_cast<std::size_t>(r))) {
    const Matrix m = columns(idx);
    if (detail::rank(m) != r) continue;
    std::optional<Matrix> inv;
    for (const auto& rows : detail::combinations(static_cast<std::size_t>(l), static_cast<std::size_t>(r))) {
      std::vector<std::size_t> cols(static_cast<std::size_t>(r));
      for (std::size_t c = 0; c < cols.size(); ++c) cols[c] = c;
      inv = detail::inverse(detail::submatrix(m, rows, cols));
      if (inv) break;
    }
    ++out.simplicial_cones;
    for (const Vector& lambda : fractional_group(*inv)) {
      std::vector<int> p(static_cast<std::size_t>(l));
      bool integral = true;
      for (int row = 0; row < l && integral; ++row) {
        Rational x = 0;
        for (std::size_t c = 0; c < lambda.size(); ++c) x += lambda[c] * m[static_cast<std::size_t>(row)][c];
        if (denominator(x) != 1) {
          integral = false;
        } else {
          p[static_cast<std::size_t>(row)] = static_cast<int>(numerator(x));
        }
      }
      if (integral) phi.insert(std::move(p));
    }
  }
  out.fractional_points = phi.size();

  for (const auto& raw : phi) {
    const Partition p = make_partition_unchecked(raw);
    if (p.weight() % a.weight() != 0) continue;
    const int n_p = p.weight() / a.weight();
    const int k_p = distance(p, scale(a, n_p));
    out.max_term = std::max<std::uint64_t>(out.max_term, static_cast<std::uint64_t>((k_p + 1) * n_p));
  }
  out.bound = std::max<std::uint64_t>(1, big_l * subdivisions * out.max_term);
  return out;
}

}  // namespace lrlab::lab
