#include "heckecentre/permutation.hpp"

#include <algorithm>
#include <numeric>

#include "heckecentre/error.hpp"

namespace hc {

Perm::Perm(std::vector<int> images) : w_(std::move(images)) {
  std::vector<bool> seen(w_.size(), false);
  for (int v : w_) {
    if (v < 0 || v >= static_cast<int>(w_.size()) || seen[v])
      throw Error(Errc::InvalidInput, "not a permutation");
    seen[v] = true;
  }
}

Perm Perm::identity(int n) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 0);
  return Perm(std::move(w));
}

Perm Perm::simple(int n, int i) {
  if (i < 0 || i + 1 >= n) throw Error(Errc::OutOfRange, "simple reflection index");
  Perm p = identity(n);
  std::swap(p.w_[i], p.w_[i + 1]);
  return p;
}

Perm operator*(const Perm& a, const Perm& b) {
  if (a.size() != b.size()) throw Error(Errc::SizeMismatch, "composing permutations of different sizes");
  std::vector<int> w(a.size());
  for (int i = 0; i < a.size(); ++i) w[i] = a.w_[b.w_[i]];
  Perm p;
  p.w_ = std::move(w);
  return p;
}

Perm Perm::inverse() const {
  Perm p;
  p.w_.resize(w_.size());
  for (int i = 0; i < size(); ++i) p.w_[w_[i]] = i;
  return p;
}

int Perm::length() const {
  int inv = 0;
  for (int i = 0; i < size(); ++i)
    for (int j = i + 1; j < size(); ++j)
      if (w_[i] > w_[j]) ++inv;
  return inv;
}

bool Perm::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if (w_[i] != i) return false;
  return true;
}

std::vector<int> Perm::reduced_word() const {
  // Peel right descents: if w(i) > w(i+1) then w = (w s_i) s_i with
  // l(w s_i) = l(w) - 1.
  std::vector<int> word;
  Perm cur = *this;
  while (!cur.is_identity()) {
    for (int i = 0; i + 1 < size(); ++i) {
      if (cur.w_[i] > cur.w_[i + 1]) {
        std::swap(cur.w_[i], cur.w_[i + 1]);
        word.push_back(i);
        break;
      }
    }
  }
  std::reverse(word.begin(), word.end());
  return word;
}

std::string Perm::to_string() const {
  std::string out = "[";
  for (int i = 0; i < size(); ++i) {
    if (i) out += ",";
    out += std::to_string(w_[i] + 1);
  }
  return out + "]";
}

std::vector<Perm> all_perms(int n) {
  std::vector<Perm> out;
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 0);
  do {
    out.emplace_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

std::size_t factorial(int n) {
  std::size_t f = 1;
  for (int k = 2; k <= n; ++k) f *= static_cast<std::size_t>(k);
  return f;
}

std::size_t perm_rank(const Perm& w) {
  const int n = w.size();
  std::size_t r = 0;
  for (int i = 0; i < n; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < n; ++j)
      if (w(j) < w(i)) ++smaller;
    r += static_cast<std::size_t>(smaller) * factorial(n - 1 - i);
  }
  return r;
}

}  // namespace hc
