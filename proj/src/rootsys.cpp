#include "parahess/rootsys.hpp"

#include <bit>
#include <stdexcept>

#include "parahess/hessvar.hpp"
#include "parahess/symgroup.hpp"

namespace parahess {

std::string Root::to_string() const { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }

RootSet::RootSet(int n) : n_(n), words_(static_cast<std::size_t>((n * n + 63) / 64), 0) {
  if (n < 0) throw std::invalid_argument("RootSet: negative degree");
}

RootSet::RootSet(int n, const std::vector<Root>& roots) : RootSet(n) {
  for (const auto& r : roots) insert(r);
}

RootSet RootSet::positive_roots(int n) {
  RootSet out(n);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) out.insert({i, j});
  return out;
}

RootSet RootSet::all_roots(int n) {
  RootSet out(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j) out.insert({i, j});
  return out;
}

void RootSet::insert(Root r) {
  if (r.i < 1 || r.j < 1 || r.i > n_ || r.j > n_ || r.i == r.j)
    throw std::invalid_argument("root " + r.to_string() + " is not valid in degree " + std::to_string(n_));
  const int b = bit(r);
  words_[b / 64] |= std::uint64_t{1} << (b % 64);
}

void RootSet::erase(Root r) {
  if (r.i < 1 || r.j < 1 || r.i > n_ || r.j > n_) return;
  const int b = bit(r);
  words_[b / 64] &= ~(std::uint64_t{1} << (b % 64));
}

bool RootSet::contains(Root r) const {
  if (r.i < 1 || r.j < 1 || r.i > n_ || r.j > n_ || r.i == r.j) return false;
  const int b = bit(r);
  return ((words_[b / 64] >> (b % 64)) & 1U) != 0;
}

int RootSet::size() const {
  int total = 0;
  for (auto w : words_) total += std::popcount(w);
  return total;
}

bool RootSet::empty() const {
  for (auto w : words_)
    if (w) return false;
  return true;
}

std::vector<Root> RootSet::members() const {
  std::vector<Root> out;
  for (int i = 1; i <= n_; ++i)
    for (int j = 1; j <= n_; ++j)
      if (i != j && contains({i, j})) out.push_back({i, j});
  return out;
}

void RootSet::check_compatible(const RootSet& other) const {
  if (n_ != other.n_)
    throw std::invalid_argument("RootSet: degree mismatch (" + std::to_string(n_) + " vs " +
                                std::to_string(other.n_) + ")");
}

RootSet& RootSet::operator&=(const RootSet& other) {
  check_compatible(other);
  for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= other.words_[k];
  return *this;
}

RootSet& RootSet::operator|=(const RootSet& other) {
  check_compatible(other);
  for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= other.words_[k];
  return *this;
}

RootSet RootSet::operator&(const RootSet& other) const {
  RootSet out = *this;
  out &= other;
  return out;
}

RootSet RootSet::operator|(const RootSet& other) const {
  RootSet out = *this;
  out |= other;
  return out;
}

RootSet RootSet::operator-(const RootSet& other) const {
  check_compatible(other);
  RootSet out = *this;
  for (std::size_t k = 0; k < words_.size(); ++k) out.words_[k] &= ~other.words_[k];
  return out;
}

RootSet RootSet::positive_part() const { return *this & positive_roots(n_); }

RootSet RootSet::negative_part() const { return *this - positive_roots(n_); }

RootSet RootSet::positive_complement() const { return positive_roots(n_) - *this; }

std::string RootSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (const auto& r : members()) {
    if (!first) out += ',';
    out += r.to_string();
    first = false;
  }
  return out + "}";
}

Root root_act(const Permutation& w, Root r) { return {w(r.i), w(r.j)}; }

RootSet root_act(const Permutation& w, const RootSet& roots) {
  if (w.degree() != roots.degree()) throw std::invalid_argument("root_act: degree mismatch");
  RootSet out(roots.degree());
  for (const auto& r : roots.members()) out.insert(root_act(w, r));
  return out;
}

RootSet phi_J(const ParabolicData& P) {
  const int n = P.degree();
  RootSet out(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j && P.same_block(i, j)) out.insert({i, j});
  return out;
}

bool root_dominates(Root g, Root h) {
  if (!g.positive() || !h.positive())
    throw std::invalid_argument("root_dominates: roots must be positive, got " + g.to_string() + " and " +
                                h.to_string());
  return g.i <= h.i && h.j <= g.j && g != h;
}

RootSet phi_H_from_h(const HessenbergFunction& h) {
  const int n = h.degree();
  RootSet out(n);
  for (int j = 1; j <= n; ++j)
    for (int i = 1; i <= h(j); ++i)
      if (i != j) out.insert({i, j});
  return out;
}

} // namespace parahess
