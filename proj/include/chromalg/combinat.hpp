#pragma once

// Indexing combinatorics: compositions, partitions, set compositions, set
// partitions, their r-level pairs, standardization and the shuffle products
// that realize the monomial-basis products.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace chromalg {

// Raised for malformed input objects (bad parts, overlapping blocks, ...).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Ordered sequence of positive integers. Ordered by size first, then
// lexicographically, so maps keyed by compositions are graded.
class Composition {
 public:
  Composition() = default;
  Composition(std::initializer_list<int> parts);
  explicit Composition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int operator[](std::size_t i) const { return parts_[i]; }

  friend bool operator==(const Composition&, const Composition&) = default;
  friend std::strong_ordering operator<=>(const Composition& a,
                                          const Composition& b);

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

// Weakly decreasing composition.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  explicit Partition(std::vector<int> parts);
  // Sorts the parts into weakly decreasing order first.
  static Partition from_unsorted(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  Composition as_composition() const { return Composition(parts_); }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& a,
                                          const Partition& b);

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

using Block = std::vector<int>;

// Ordered list of nonempty disjoint blocks of positive integers. Block
// order is kept as given; each block is stored sorted.
class SetComposition {
 public:
  SetComposition() = default;
  SetComposition(std::initializer_list<std::initializer_list<int>> blocks);
  explicit SetComposition(std::vector<Block> blocks);

  const std::vector<Block>& blocks() const { return blocks_; }
  int length() const { return static_cast<int>(blocks_.size()); }
  int size() const { return size_; }
  bool empty() const { return blocks_.empty(); }
  // Union of the blocks, sorted.
  std::vector<int> ground() const;
  Composition shape() const;

  friend bool operator==(const SetComposition&, const SetComposition&) =
      default;
  friend std::strong_ordering operator<=>(const SetComposition& a,
                                          const SetComposition& b);

 private:
  std::vector<Block> blocks_;
  int size_ = 0;
};

// Unordered family of nonempty disjoint blocks. Canonical form: sorted
// interiors, blocks ordered by minimum element.
class SetPartition {
 public:
  SetPartition() = default;
  SetPartition(std::initializer_list<std::initializer_list<int>> blocks);
  explicit SetPartition(std::vector<Block> blocks);

  const std::vector<Block>& blocks() const { return blocks_; }
  int length() const { return static_cast<int>(blocks_.size()); }
  int size() const { return size_; }
  bool empty() const { return blocks_.empty(); }
  std::vector<int> ground() const;
  Partition shape() const;

  friend bool operator==(const SetPartition&, const SetPartition&) = default;
  friend std::strong_ordering operator<=>(const SetPartition& a,
                                          const SetPartition& b);

 private:
  std::vector<Block> blocks_;
  int size_ = 0;
};

// Threshold r of the r-level objects; a positive integer or infinity.
class RLevel {
 public:
  constexpr RLevel() = default;
  explicit RLevel(int r);
  static constexpr RLevel infinity() {
    RLevel level;
    level.value_ = kInfinite;
    return level;
  }

  bool is_infinite() const { return value_ == kInfinite; }
  int value() const { return value_; }
  // True when a part/block of this size belongs on the composition side.
  bool admits(int part) const { return !is_infinite() && part >= value_; }

  friend bool operator==(const RLevel&, const RLevel&) = default;
  friend auto operator<=>(const RLevel&, const RLevel&) = default;

 private:
  static constexpr int kInfinite = std::numeric_limits<int>::max();
  int value_ = 1;
};

// (beta, mu): beta has parts >= r, mu has parts < r.
class RComposition {
 public:
  RComposition(RLevel r, Composition beta, Partition mu);

  RLevel r() const { return r_; }
  const Composition& beta() const { return beta_; }
  const Partition& mu() const { return mu_; }
  int size() const { return beta_.size() + mu_.size(); }

  friend bool operator==(const RComposition&, const RComposition&) = default;
  friend auto operator<=>(const RComposition&, const RComposition&) = default;

 private:
  RLevel r_;
  Composition beta_;
  Partition mu_;
};

// (phi, pi) on disjoint ground sets whose shapes form an r-composition.
class RSetComposition {
 public:
  RSetComposition(RLevel r, SetComposition phi, SetPartition pi);

  RLevel r() const { return r_; }
  const SetComposition& phi() const { return phi_; }
  const SetPartition& pi() const { return pi_; }
  int size() const { return phi_.size() + pi_.size(); }
  std::vector<int> ground() const;

  friend bool operator==(const RSetComposition&, const RSetComposition&) =
      default;
  friend auto operator<=>(const RSetComposition&, const RSetComposition&) =
      default;

 private:
  RLevel r_;
  SetComposition phi_;
  SetPartition pi_;
};

// One-line notation of a bijection of [n].
class Permutation {
 public:
  Permutation() = default;
  Permutation(std::initializer_list<int> word);
  explicit Permutation(std::vector<int> word);
  static Permutation identity(int n);

  const std::vector<int>& word() const { return word_; }
  int size() const { return static_cast<int>(word_.size()); }
  int operator()(int i) const { return word_[i - 1]; }  // 1-based
  Permutation inverse() const;
  // Positions i with sigma(i) > sigma(i+1).
  std::vector<int> descents() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> word_;
};

// ---- compositions and partitions -------------------------------------------

std::vector<int> descent_set(const Composition& alpha);
Composition composition_from_descent_set(const std::vector<int>& set, int n);
// set(alpha) is a subset of set(beta); throws on size mismatch.
bool coarsens(const Composition& alpha, const Composition& beta);
bool dominance_leq(const Partition& mu, const Partition& lambda);
// lambda! = product of factorials of the parts.
std::uint64_t parts_factorial(const Partition& lambda);
// lambda^! = product of factorials of the part multiplicities.
std::uint64_t multiplicities_factorial(const Partition& lambda);

// Overlapping shuffle of the part sequences; multiplicities are kept.
std::map<Composition, int> quasi_shuffle(const Composition& alpha,
                                         const Composition& beta);

// ---- words, set compositions, set partitions --------------------------------

Permutation standardize_word(const std::vector<int>& word);
SetComposition standardize(const SetComposition& phi);
SetPartition standardize(const SetPartition& pi);
RSetComposition standardize(const RSetComposition& x);

// psi is phi with some bars removed (blocks are unions of consecutive
// blocks of phi).
bool corrupts(const SetComposition& psi, const SetComposition& phi);
// phi is psi with some bars added, reading each block of psi in increasing
// order.
bool reforms(const SetComposition& phi, const SetComposition& psi);

// All Gamma with Gamma restricted to [n] equal to phi and the standardized
// restriction to n+1..n+m equal to psi.
std::vector<SetComposition> shifted_quasi_shuffle(const SetComposition& phi,
                                                  const SetComposition& psi);
// Arrangements of the blocks of phi and pi keeping phi's block order.
std::vector<SetComposition> bar_shuffle(const SetComposition& phi,
                                        const SetPartition& pi);
SetComposition restrict_to(const SetComposition& phi,
                           const std::vector<int>& subset);
// Blocks of size >= r (in order) versus blocks of size < r.
RSetComposition r_split(const SetComposition& upsilon, RLevel r);
SetPartition partition_meet(const SetPartition& pi, const SetPartition& omega);
// Maximal increasing runs of the one-line word, as blocks.
SetComposition descent_runs(const Permutation& sigma);

// ---- enumeration ---------------------------------------------------------------

std::vector<Composition> all_compositions(int n);
std::vector<Partition> all_partitions(int n);
std::vector<SetComposition> all_set_compositions(int n);
std::vector<SetPartition> all_set_partitions(int n);
std::vector<RComposition> all_r_compositions(int n, RLevel r);
std::vector<RSetComposition> all_r_set_compositions(int n, RLevel r);
std::vector<Permutation> all_permutations(int n);

// ---- text ---------------------------------------------------------------------------

std::string to_string(const Composition& alpha);       // (2,1,3)
std::string to_string(const Partition& lambda);         // (3,2,1)
std::string to_string(const SetComposition& phi);       // (13|2|4)
std::string to_string(const SetPartition& pi);          // 13/24
std::string to_string(const RSetComposition& x);        // ((24),1/3)
std::string to_string(const Permutation& sigma);

}  // namespace chromalg
