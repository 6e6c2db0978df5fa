#include "lrlab/lab/cone.hpp"

#include "lab/linear.hpp"
#include "lrlab/constructions.hpp"
#include "lrlab/error.hpp"

namespace lrlab::lab {

std::vector<Partition> cone_generators(const Partition& a, int l) {
  std::vector<Partition> out;
  for (const Subdivision& j : enumerate_subdivisions(l)) out.push_back(build_G(a, j));
  return out;
}

ConeCertificate cone_membership(const Partition& b, const Partition& a, int l) {
  if (a.length() > l || b.length() > l) throw Error(Errc::IndexOutOfRange, "partition longer than l");
  ConeCertificate c;
  if (a.weight() == 0) {
    c.member = b.weight() == 0;
    if (c.member) c.n = 0;
    return c;
  }
  if (b.weight() % a.weight() != 0) return c;
  const int n = b.weight() / a.weight();
  c.member = dominates(scale(a, n), b);
  if (c.member) c.n = n;
  return c;
}

ConeCertificate cone_generator_decomposition(const Partition& b, const Partition& a, int l) {
  ConeCertificate c = cone_membership(b, a, l);
  if (!c.member) throw Error(Errc::HypothesisFails, to_string(b) + " is not in the cone of " + to_string(a));
  const auto subs = enumerate_subdivisions(l);
  // First subdivision producing each distinct generator.
  std::vector<std::size_t> owners;
  std::vector<std::vector<int>> gens;
  for (std::size_t i = 0; i < subs.size(); ++i) {
    auto g = build_G(a, subs[i]).padded(l);
    bool dup = false;
    for (const auto& h : gens) dup = dup || h == g;
    if (!dup) {
      gens.push_back(std::move(g));
      owners.push_back(i);
    }
  }
  const auto target = b.padded(l);
  c.decomposition.emplace();
  if (b.weight() == 0) return c;

  for (std::size_t k = 1; k <= std::min(gens.size(), static_cast<std::size_t>(l)); ++k) {
    for (const auto& idx : detail::combinations(gens.size(), k)) {
      detail::Matrix m(static_cast<std::size_t>(l), detail::Vector(k));
      for (std::size_t col = 0; col < k; ++col) {
        for (std::size_t row = 0; row < static_cast<std::size_t>(l); ++row) m[row][col] = gens[idx[col]][row];
      }
      if (detail::rank(m) != static_cast<int>(k)) continue;
      std::vector<std::size_t> cols(k);
      for (std::size_t col = 0; col < k; ++col) cols[col] = col;
      for (const auto& rows : detail::combinations(static_cast<std::size_t>(l), k)) {
        const auto inv = detail::inverse(detail::submatrix(m, rows, cols));
        if (!inv) continue;
        detail::Vector kappa(k);
        for (std::size_t i = 0; i < k; ++i) {
          for (std::size_t j = 0; j < k; ++j) kappa[i] += (*inv)[i][j] * target[rows[j]];
        }
        bool ok = true;
        for (const Rational& x : kappa) ok = ok && x >= 0;
        for (std::size_t row = 0; ok && row < static_cast<std::size_t>(l); ++row) {
          Rational sum = 0;
          for (std::size_t col = 0; col < k; ++col) sum += kappa[col] * m[row][col];
          ok = sum == target[row];
        }
        if (ok) {
          for (std::size_t i = 0; i < k; ++i) {
            if (kappa[i] != 0) c.decomposition->emplace_back(subs[owners[idx[i]]], kappa[i]);
          }
          return c;
        }
        break;
      }
    }
  }
  throw Error(Errc::NoDecomposition, "no non-negative combination of G_J(" + to_string(a) + ") gives " + to_string(b));
}

bool certificate_reproduces(const ConeCertificate& cert, const Partition& b, const Partition& a, int l) {
  if (!cert.decomposition) return false;
  std::vector<Rational> sum(static_cast<std::size_t>(l));
  for (const auto& [j, kappa] : *cert.decomposition) {
    if (kappa < 0 || j.length() != l) return false;
    const auto g = build_G(a, j).padded(l);
    for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += kappa * g[i];
  }
  const auto target = b.padded(l);
  for (std::size_t i = 0; i < sum.size(); ++i) {
    if (sum[i] != target[i]) return false;
  }
  return true;
}

}  // namespace lrlab::lab
