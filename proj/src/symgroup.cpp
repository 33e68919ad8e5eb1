#include "parahess/symgroup.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "parahess/rootsys.hpp"

namespace parahess {

namespace {

void require_same_degree(const Permutation& a, const Permutation& b, const char* what) {
  if (a.degree() != b.degree())
    throw std::invalid_argument(std::string(what) + ": degree mismatch (" + std::to_string(a.degree()) + " vs " +
                                std::to_string(b.degree()) + ")");
}

void require_degree(const Permutation& w, const ParabolicData& P, const char* what) {
  if (w.degree() != P.degree())
    throw std::invalid_argument(std::string(what) + ": permutation degree " + std::to_string(w.degree()) +
                                " does not match parabolic degree " + std::to_string(P.degree()));
}

} // namespace

// ---------------------------------------------------------------------------
// Permutation

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = degree();
  std::vector<bool> seen(n, false);
  for (int v : images_) {
    if (v < 1 || v > n || seen[v - 1])
      throw std::invalid_argument("Permutation: one-line form is not a bijection of {1.." + std::to_string(n) + "}");
    seen[v - 1] = true;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 0) throw std::invalid_argument("Permutation: negative degree");
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 1);
  return Permutation(std::move(images));
}

Permutation Permutation::simple(int i, int n) {
  if (i < 1 || i >= n)
    throw std::invalid_argument("simple transposition s_" + std::to_string(i) + " out of range for degree " +
                                std::to_string(n));
  Permutation s = identity(n);
  std::swap(s.images_[i - 1], s.images_[i]);
  return s;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 0; i < degree(); ++i) inv[images_[i] - 1] = i + 1;
  Permutation out;
  out.images_ = std::move(inv);
  return out;
}

int Permutation::length() const {
  int count = 0;
  for (int i = 0; i < degree(); ++i)
    for (int j = i + 1; j < degree(); ++j)
      if (images_[i] > images_[j]) ++count;
  return count;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (images_[i] != i + 1) return false;
  return true;
}

Permutation Permutation::operator*(const Permutation& other) const {
  require_same_degree(*this, other, "compose");
  Permutation out;
  out.images_.resize(images_.size());
  for (int i = 0; i < degree(); ++i) out.images_[i] = images_[other.images_[i] - 1];
  return out;
}

std::string Permutation::to_string() const {
  std::string out;
  for (int i = 0; i < degree(); ++i) {
    if (i) out += ',';
    out += std::to_string(images_[i]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// ParabolicData

ParabolicData::ParabolicData(int n, std::vector<int> J) : n_(n) {
  if (n < 1) throw std::invalid_argument("ParabolicData: degree must be at least 1");
  if (n > 32) throw std::invalid_argument("ParabolicData: degree above 32 is not supported");
  for (int i : J) {
    if (i < 1 || i >= n)
      throw std::invalid_argument("ParabolicData: index " + std::to_string(i) + " outside 1.." +
                                  std::to_string(n - 1));
    mask_ |= 1U << (i - 1);
  }
  for (int i = 1; i < n; ++i)
    if (contains(i)) J_.push_back(i);

  block_of_.resize(n);
  int first = 1;
  for (int p = 1; p <= n; ++p) {
    if (p == n || !contains(p)) {
      for (int q = first; q <= p; ++q) block_of_[q - 1] = static_cast<int>(blocks_.size());
      blocks_.push_back({first, p});
      first = p + 1;
    }
  }
}

ParabolicData ParabolicData::from_mask(int n, unsigned mask) {
  std::vector<int> J;
  for (int i = 1; i < n; ++i)
    if ((mask >> (i - 1)) & 1U) J.push_back(i);
  return ParabolicData(n, std::move(J));
}

ParabolicData ParabolicData::full(int n) {
  std::vector<int> J(std::max(n - 1, 0));
  std::iota(J.begin(), J.end(), 1);
  return ParabolicData(n, std::move(J));
}

std::vector<int> ParabolicData::composition() const {
  std::vector<int> mu;
  mu.reserve(blocks_.size());
  for (const auto& b : blocks_) mu.push_back(b.size());
  return mu;
}

std::string ParabolicData::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < J_.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(J_[k]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Strings

int StringDecomposition::string_length(int i) const {
  if (i <= 0 || i >= n) return 0;
  const int k = starts[i - 1];
  return k == 0 ? 0 : i - k + 1;
}

std::vector<int> StringDecomposition::lengths() const {
  std::vector<int> out;
  for (int i = 1; i < n; ++i) out.push_back(string_length(i));
  return out;
}

std::vector<int> StringDecomposition::word() const {
  std::vector<int> out;
  for (int i = n - 1; i >= 1; --i) {
    const int k = starts[i - 1];
    if (k == 0) continue;
    for (int g = k; g <= i; ++g) out.push_back(g);
  }
  return out;
}

Permutation StringDecomposition::product() const { return perm_from_word(word(), n); }

StringDecomposition StringDecomposition::from_lengths(std::span<const int> lengths) {
  StringDecomposition sd;
  sd.n = static_cast<int>(lengths.size()) + 1;
  sd.starts.resize(lengths.size(), 0);
  for (int i = 1; i < sd.n; ++i) {
    const int len = lengths[i - 1];
    if (len < 0 || len > i)
      throw std::invalid_argument("string " + std::to_string(i) + " cannot have length " + std::to_string(len));
    sd.starts[i - 1] = len == 0 ? 0 : i - len + 1;
  }
  return sd;
}

// ---------------------------------------------------------------------------
// Words

Permutation perm_from_word(std::span<const int> word, int n) {
  // Right-to-left application: left multiplication by s_g swaps the values g and g+1.
  Permutation w = Permutation::identity(n);
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    const int g = *it;
    if (g < 1 || g >= n)
      throw std::invalid_argument("generator s_" + std::to_string(g) + " out of range for degree " +
                                  std::to_string(n));
    w = Permutation::simple(g, n) * w;
  }
  return w;
}

std::vector<int> reduced_word(const Permutation& w) { return string_decompose(w).word(); }

std::string word_to_string(std::span<const int> word) {
  if (word.empty()) return "e";
  std::string out;
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (k) out += ' ';
    out += 's' + std::to_string(word[k]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Length, inversions, Bruhat

RootSet inversion_set(const Permutation& w) {
  const int n = w.degree();
  RootSet out(n);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (w(i) > w(j)) out.insert({i, j});
  return out;
}

bool bruhat_leq(const Permutation& u, const Permutation& w) {
  require_same_degree(u, w, "bruhat_leq");
  const int n = u.degree();
  if (u.length() > w.length()) return false;
  // cnt[k] = |{j <= i : perm(j) >= k}|, updated one position at a time.
  std::vector<int> cu(n + 2, 0), cw(n + 2, 0);
  for (int i = 1; i <= n; ++i) {
    for (int k = 1; k <= u(i); ++k) ++cu[k];
    for (int k = 1; k <= w(i); ++k) ++cw[k];
    for (int k = 1; k <= n; ++k)
      if (cu[k] > cw[k]) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Parabolic cosets

std::pair<Permutation, Permutation> coset_factor(const Permutation& w, const ParabolicData& P) {
  require_degree(w, P, "coset_factor");
  std::vector<int> v_images(w.images().begin(), w.images().end());
  for (const auto& b : P.blocks()) std::sort(v_images.begin() + (b.first - 1), v_images.begin() + b.last);
  Permutation v(std::move(v_images));
  Permutation y = v.inverse() * w;
  return {std::move(v), std::move(y)};
}

bool is_min_coset_rep(const Permutation& w, const ParabolicData& P) {
  require_degree(w, P, "is_min_coset_rep");
  for (int i : P.J())
    if (w(i) > w(i + 1)) return false;
  return true;
}

bool in_parabolic_subgroup(const Permutation& w, const ParabolicData& P) {
  require_degree(w, P, "in_parabolic_subgroup");
  for (int p = 1; p <= w.degree(); ++p)
    if (!P.same_block(p, w(p))) return false;
  return true;
}

Permutation longest_element(const ParabolicData& P) {
  std::vector<int> images(P.degree());
  for (const auto& b : P.blocks())
    for (int p = b.first; p <= b.last; ++p) images[p - 1] = b.first + b.last - p;
  return Permutation(std::move(images));
}

StringDecomposition string_decompose(const Permutation& w) {
  const int n = w.degree();
  StringDecomposition sd;
  sd.n = n;
  sd.starts.assign(std::max(n - 1, 0), 0);
  Permutation rest = w;
  for (int m = n; m >= 2; --m) {
    const int k = rest(m);
    if (k == m) continue;
    sd.starts[m - 2] = k;
    // rest <- (s_k ... s_{m-1})^{-1} rest = s_{m-1} ... s_k rest
    for (int g = k; g <= m - 1; ++g) rest = Permutation::simple(g, n) * rest;
  }
  return sd;
}

bool is_min_coset_rep_strings(const Permutation& w, const ParabolicData& P) {
  require_degree(w, P, "is_min_coset_rep_strings");
  const auto sd = string_decompose(w);
  for (int i : P.J())
    if (sd.string_length(i) > sd.string_length(i - 1)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Enumeration and W_J

void for_each_permutation(int n, const std::function<void(const Permutation&)>& fn) {
  if (n < 1) throw std::invalid_argument("for_each_permutation: degree must be at least 1");
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 1);
  do {
    fn(Permutation(images));
  } while (std::next_permutation(images.begin(), images.end()));
}

std::vector<Permutation> enumerate_sn(int n) {
  std::vector<Permutation> out;
  for_each_permutation(n, [&](const Permutation& w) { out.push_back(w); });
  return out;
}

std::vector<Permutation> enumerate_WJ(const ParabolicData& P) {
  std::vector<int> images(P.degree());
  std::iota(images.begin(), images.end(), 1);
  std::vector<Permutation> out;
  const auto& blocks = P.blocks();
  // Odometer over blocks; the last block varies fastest, giving lexicographic order.
  while (true) {
    out.emplace_back(images);
    int b = static_cast<int>(blocks.size()) - 1;
    for (; b >= 0; --b) {
      auto first = images.begin() + (blocks[b].first - 1);
      auto last = images.begin() + blocks[b].last;
      if (std::next_permutation(first, last)) break; // wraps to sorted on false
    }
    if (b < 0) break;
  }
  return out;
}

Polynomial poincare_WJ(const ParabolicData& P) {
  Polynomial p;
  for (const auto& y : enumerate_WJ(P)) p.add_term(y.length());
  return p;
}

Polynomial poincare_WJ_product(const ParabolicData& P) {
  Polynomial p{1};
  for (const auto& b : P.blocks()) p = p * Polynomial::t_factorial(b.size());
  return p;
}

} // namespace parahess
