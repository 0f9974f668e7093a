#include "hamsym/abelian.hpp"

#include <algorithm>
#include <numeric>

#include "hamsym/error.hpp"

namespace hamsym {

AbelianGroup::AbelianGroup(std::vector<int> invariant_factors) : factors_(std::move(invariant_factors)) {
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i] < 2) throw Error(ErrorCode::NotApplicable, "invariant factor below 2");
    if (i > 0 && factors_[i] % factors_[i - 1] != 0)
      throw Error(ErrorCode::NotApplicable, "invariant factors must form a divisibility chain");
  }
  for (int d : factors_) order_ *= d;
}

AbelianGroup AbelianGroup::from_moduli(std::vector<int> moduli) {
  AbelianGroup g;
  for (int d : moduli)
    if (d < 1) throw Error(ErrorCode::NotApplicable, "modulus below 1");
  g.factors_ = std::move(moduli);
  g.order_ = 1;
  for (int d : g.factors_) g.order_ *= d;
  return g;
}

bool AbelianGroup::valid(const GroupElem& a) const {
  if (a.residues.size() != factors_.size()) return false;
  for (std::size_t i = 0; i < factors_.size(); ++i)
    if (a.residues[i] < 0 || a.residues[i] >= factors_[i]) return false;
  return true;
}

int AbelianGroup::index_of(const GroupElem& x) const {
  if (!valid(x)) throw Error(ErrorCode::VertexOutOfRange, "element outside group " + name());
  int idx = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) idx = idx * factors_[i] + x.residues[i];
  return idx;
}

GroupElem AbelianGroup::element(int index) const {
  GroupElem x{std::vector<int>(factors_.size())};
  for (int i = static_cast<int>(factors_.size()) - 1; i >= 0; --i) {
    x.residues[i] = index % factors_[i];
    index /= factors_[i];
  }
  return x;
}

GroupElem AbelianGroup::add(const GroupElem& a, const GroupElem& b) const {
  GroupElem r{std::vector<int>(factors_.size())};
  for (std::size_t i = 0; i < factors_.size(); ++i)
    r.residues[i] = (a.residues[i] + b.residues[i]) % factors_[i];
  return r;
}

GroupElem AbelianGroup::negate(const GroupElem& a) const {
  GroupElem r{std::vector<int>(factors_.size())};
  for (std::size_t i = 0; i < factors_.size(); ++i)
    r.residues[i] = (factors_[i] - a.residues[i]) % factors_[i];
  return r;
}

GroupElem AbelianGroup::scale(const GroupElem& a, long k) const {
  GroupElem r{std::vector<int>(factors_.size())};
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    long v = (static_cast<long>(a.residues[i]) * k) % factors_[i];
    if (v < 0) v += factors_[i];
    r.residues[i] = static_cast<int>(v);
  }
  return r;
}

int AbelianGroup::order_of(const GroupElem& a) const {
  int ord = 1;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    int d = factors_[i];
    int oi = d / std::gcd(d, a.residues[i]);
    ord = std::lcm(ord, oi);
  }
  return ord;
}

int AbelianGroup::add_index(int a, int b) const { return index_of(add(element(a), element(b))); }

int AbelianGroup::neg_index(int a) const { return index_of(negate(element(a))); }

std::vector<int> AbelianGroup::subgroup(const std::vector<int>& gens) const {
  std::vector<char> in(order_, 0);
  std::vector<int> members{0};
  in[0] = 1;
  std::vector<GroupElem> g;
  for (int x : gens) g.push_back(element(x));
  for (std::size_t head = 0; head < members.size(); ++head) {
    GroupElem cur = element(members[head]);
    for (const auto& s : g) {
      int y = index_of(add(cur, s));
      if (!in[y]) {
        in[y] = 1;
        members.push_back(y);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

std::string AbelianGroup::name() const {
  if (factors_.empty()) return "Z1";
  std::string s;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) s += "x";
    s += "Z" + std::to_string(factors_[i]);
  }
  return s;
}

std::string AbelianGroup::format(const GroupElem& a) const {
  if (a.residues.size() == 1) return std::to_string(a.residues[0]);
  std::string s = "(";
  for (std::size_t i = 0; i < a.residues.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(a.residues[i]);
  }
  return s + ")";
}

GeneratingSet::GeneratingSet(const AbelianGroup& group, std::vector<GroupElem> elems) {
  std::vector<int> idx;
  for (const auto& e : elems) idx.push_back(group.index_of(e));
  std::sort(idx.begin(), idx.end());
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
  for (int i : idx) {
    if (i == 0) throw Error(ErrorCode::ContainsIdentity, "identity in generating set");
    if (!std::binary_search(idx.begin(), idx.end(), group.neg_index(i)))
      throw Error(ErrorCode::NotInverseClosed,
                  "inverse of " + group.format(group.element(i)) + " missing");
  }
  if (static_cast<int>(group.subgroup(idx).size()) != group.order())
    throw Error(ErrorCode::NotGenerating, "set does not generate " + group.name());
  indices_ = idx;
  for (int i : idx) elems_.push_back(group.element(i));
}

GeneratingSet GeneratingSet::closed_under_inverses(const AbelianGroup& group, std::vector<GroupElem> elems) {
  std::vector<GroupElem> all = elems;
  for (const auto& e : elems) all.push_back(group.negate(e));
  return GeneratingSet(group, std::move(all));
}

}  // namespace hamsym
