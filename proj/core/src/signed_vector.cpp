#include "lrlab/signed_vector.hpp"

#include "lrlab/error.hpp"

namespace lrlab {

SignedVector SignedVector::from_partition(const Partition& a, int l) {
  if (a.length() > l) {
    throw Error(Errc::IndexOutOfRange, to_string(a) + " is longer than " + std::to_string(l));
  }
  std::vector<long long> e(static_cast<std::size_t>(l), 0);
  for (int i = 1; i <= a.length(); ++i) e[static_cast<std::size_t>(i - 1)] = a[i];
  return SignedVector(std::move(e));
}

SignedVector SignedVector::operator+(const SignedVector& other) const {
  if (other.length() != length()) throw Error(Errc::IndexOutOfRange, "length mismatch in signed sum");
  std::vector<long long> e(entries_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += other.entries_[i];
  return SignedVector(std::move(e));
}

bool SignedVector::is_partition() const noexcept {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i] < 0) return false;
    if (i + 1 < entries_.size() && entries_[i] < entries_[i + 1]) return false;
  }
  return true;
}

std::optional<Partition> SignedVector::to_partition() const {
  if (!is_partition()) return std::nullopt;
  std::vector<int> parts(entries_.begin(), entries_.end());
  return make_partition_unchecked(std::move(parts));
}

std::string to_string(const SignedVector& v) {
  std::string out = "(";
  for (int i = 1; i <= v.length(); ++i) {
    if (i > 1) out += ',';
    out += std::to_string(v[i]);
  }
  return out + ")";
}

SignedVector chi(const Partition& a, int l) {
  if (a.length() > l) throw Error(Errc::IndexOutOfRange, to_string(a) + " is longer than " + std::to_string(l));
  std::vector<long long> e(static_cast<std::size_t>(l));
  for (int i = 1; i <= l; ++i) e[static_cast<std::size_t>(i - 1)] = -a[l + 1 - i];
  return SignedVector(std::move(e));
}

SignedVector chi_J(const Partition& a, const Subdivision& j) {
  const int l = j.length();
  if (a.length() > l) throw Error(Errc::IndexOutOfRange, to_string(a) + " is longer than " + std::to_string(l));
  std::vector<long long> e;
  e.reserve(static_cast<std::size_t>(l));
  for (const Interval& iv : j.intervals()) {
    for (int i = iv.last; i >= iv.first; --i) e.push_back(-a[i]);
  }
  return SignedVector(std::move(e));
}

SignedVector e_vector(const Subdivision& j, int m) {
  if (m < 1 || m > j.count()) throw Error(Errc::IndexOutOfRange, "block index out of range");
  SignedVector v = SignedVector::zeros(j.length());
  v[j.interval(m).last] = -1;
  return v;
}

SignedVector f_vector(const Subdivision& j, int n) {
  if (n < 1 || n > j.count()) throw Error(Errc::IndexOutOfRange, "block index out of range");
  SignedVector v = SignedVector::zeros(j.length());
  v[j.interval(n).first] = 1;
  return v;
}

}  // namespace lrlab
