#pragma once

#include <string>
#include <vector>

namespace hamsym {

// Element of an abelian group as a residue tuple.
struct GroupElem {
  std::vector<int> residues;

  friend bool operator==(const GroupElem&, const GroupElem&) = default;
  friend auto operator<=>(const GroupElem&, const GroupElem&) = default;
};

// Finite abelian group Z_{d1} x ... x Z_{dr} with d1 | d2 | ... | dr, each >= 2.
class AbelianGroup {
 public:
  AbelianGroup() = default;
  // Throws NotApplicable when the divisibility chain fails or a factor is < 2.
  explicit AbelianGroup(std::vector<int> invariant_factors);
  // Arbitrary moduli (no chain requirement), used for subgroup coordinates.
  static AbelianGroup from_moduli(std::vector<int> moduli);

  const std::vector<int>& factors() const { return factors_; }
  int rank() const { return static_cast<int>(factors_.size()); }
  int order() const { return order_; }

  // Elements are indexed in lexicographic residue order (first component most significant).
  int index_of(const GroupElem& x) const;
  GroupElem element(int index) const;
  GroupElem zero() const { return GroupElem{std::vector<int>(factors_.size(), 0)}; }

  GroupElem add(const GroupElem& a, const GroupElem& b) const;
  GroupElem negate(const GroupElem& a) const;
  GroupElem sub(const GroupElem& a, const GroupElem& b) const { return add(a, negate(b)); }
  GroupElem scale(const GroupElem& a, long k) const;
  int order_of(const GroupElem& a) const;
  bool valid(const GroupElem& a) const;

  // Index-level helpers: add_table()[a][b] = index of a+b.
  int add_index(int a, int b) const;
  int neg_index(int a) const;

  // Indices of the subgroup generated by the given element indices, sorted.
  std::vector<int> subgroup(const std::vector<int>& gens) const;

  // "Z4xZ2" style name; "Z1" for the trivial group.
  std::string name() const;
  std::string format(const GroupElem& a) const;

  friend bool operator==(const AbelianGroup& a, const AbelianGroup& b) { return a.factors_ == b.factors_; }

 private:
  std::vector<int> factors_;
  int order_ = 1;
};

// Inverse-closed generating set without the identity, sorted by element index.
class GeneratingSet {
 public:
  GeneratingSet() = default;
  // Validates: throws ContainsIdentity, NotInverseClosed or NotGenerating.
  GeneratingSet(const AbelianGroup& group, std::vector<GroupElem> elems);
  // Adds missing inverses before validating.
  static GeneratingSet closed_under_inverses(const AbelianGroup& group, std::vector<GroupElem> elems);

  const std::vector<GroupElem>& elems() const { return elems_; }
  const std::vector<int>& indices() const { return indices_; }
  int size() const { return static_cast<int>(elems_.size()); }

 private:
  std::vector<GroupElem> elems_;
  std::vector<int> indices_;
};

}  // namespace hamsym
