#include "chromalg/combinat.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace chromalg {

namespace {

void require(bool cond, const char* what) {
  if (!cond) throw InvalidArgument(what);
}

int sum_of(const std::vector<int>& v) {
  return std::accumulate(v.begin(), v.end(), 0);
}

// Sorts each block and checks nonempty, positive, pairwise disjoint.
int normalize_blocks(std::vector<Block>& blocks) {
  std::set<int> seen;
  int total = 0;
  for (auto& b : blocks) {
    require(!b.empty(), "empty block");
    std::sort(b.begin(), b.end());
    for (int x : b) {
      require(x >= 1, "block elements must be positive");
      require(seen.insert(x).second, "blocks are not disjoint");
    }
    total += static_cast<int>(b.size());
  }
  return total;
}

std::vector<Block> to_blocks(
    std::initializer_list<std::initializer_list<int>> blocks) {
  std::vector<Block> out;
  for (const auto& b : blocks) out.emplace_back(b);
  return out;
}

std::vector<int> sorted_union(const std::vector<Block>& blocks) {
  std::vector<int> out;
  for (const auto& b : blocks) out.insert(out.end(), b.begin(), b.end());
  std::sort(out.begin(), out.end());
  return out;
}

// Rank of each element of ground, for relabelling onto [n].
std::map<int, int> rank_map(const std::vector<int>& ground) {
  std::map<int, int> r;
  int i = 0;
  for (int x : ground) r[x] = ++i;
  return r;
}

Block relabel(const Block& b, const std::map<int, int>& r) {
  Block out;
  out.reserve(b.size());
  for (int x : b) out.push_back(r.at(x));
  return out;
}

bool is_initial_segment(const std::vector<int>& ground) {
  for (std::size_t i = 0; i < ground.size(); ++i)
    if (ground[i] != static_cast<int>(i) + 1) return false;
  return true;
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

std::string join_block(const Block& b, bool wide) {
  std::string s;
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (wide && i) s += ',';
    s += std::to_string(b[i]);
  }
  return s;
}

bool needs_commas(const std::vector<int>& ground) {
  return !ground.empty() && ground.back() >= 10;
}

}  // namespace

// ---- Composition ----------------------------------------------------------------

Composition::Composition(std::initializer_list<int> parts)
    : Composition(std::vector<int>(parts)) {}

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) require(p >= 1, "composition parts must be positive");
  size_ = sum_of(parts_);
}

std::strong_ordering operator<=>(const Composition& a, const Composition& b) {
  if (auto c = a.size_ <=> b.size_; c != 0) return c;
  return a.parts_ <=> b.parts_;
}

// ---- Partition --------------------------------------------------------------------

Partition::Partition(std::initializer_list<int> parts)
    : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    require(parts_[i] >= 1, "partition parts must be positive");
    if (i) require(parts_[i - 1] >= parts_[i], "partition must be weakly decreasing");
  }
  size_ = sum_of(parts_);
}

Partition Partition::from_unsorted(std::vector<int> parts) {
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
  if (auto c = a.size_ <=> b.size_; c != 0) return c;
  return a.parts_ <=> b.parts_;
}

// ---- SetComposition -----------------------------------------------------------

SetComposition::SetComposition(
    std::initializer_list<std::initializer_list<int>> blocks)
    : SetComposition(to_blocks(blocks)) {}

SetComposition::SetComposition(std::vector<Block> blocks)
    : blocks_(std::move(blocks)) {
  size_ = normalize_blocks(blocks_);
}

std::vector<int> SetComposition::ground() const { return sorted_union(blocks_); }

Composition SetComposition::shape() const {
  std::vector<int> parts;
  for (const auto& b : blocks_) parts.push_back(static_cast<int>(b.size()));
  return Composition(std::move(parts));
}

std::strong_ordering operator<=>(const SetComposition& a,
                                 const SetComposition& b) {
  if (auto c = a.size_ <=> b.size_; c != 0) return c;
  return a.blocks_ <=> b.blocks_;
}

// ---- SetPartition ---------------------------------------------------------------

SetPartition::SetPartition(
    std::initializer_list<std::initializer_list<int>> blocks)
    : SetPartition(to_blocks(blocks)) {}

SetPartition::SetPartition(std::vector<Block> blocks)
    : blocks_(std::move(blocks)) {
  size_ = normalize_blocks(blocks_);
  std::sort(blocks_.begin(), blocks_.end(),
            [](const Block& x, const Block& y) { return x.front() < y.front(); });
}

std::vector<int> SetPartition::ground() const { return sorted_union(blocks_); }

Partition SetPartition::shape() const {
  std::vector<int> parts;
  for (const auto& b : blocks_) parts.push_back(static_cast<int>(b.size()));
  return Partition::from_unsorted(std::move(parts));
}

std::strong_ordering operator<=>(const SetPartition& a, const SetPartition& b) {
  if (auto c = a.size_ <=> b.size_; c != 0) return c;
  return a.blocks_ <=> b.blocks_;
}

// ---- r-level objects ----------------------------------------------------------------

RLevel::RLevel(int r) : value_(r) { require(r >= 1, "r must be positive"); }

RComposition::RComposition(RLevel r, Composition beta, Partition mu)
    : r_(r), beta_(std::move(beta)), mu_(std::move(mu)) {
  for (int p : beta_.parts()) require(r_.admits(p), "beta has a part below r");
  for (int p : mu_.parts()) require(!r_.admits(p), "mu has a part at or above r");
}

RSetComposition::RSetComposition(RLevel r, SetComposition phi, SetPartition pi)
    : r_(r), phi_(std::move(phi)), pi_(std::move(pi)) {
  for (const auto& b : phi_.blocks())
    require(r_.admits(static_cast<int>(b.size())), "phi has a block below r");
  for (const auto& b : pi_.blocks())
    require(!r_.admits(static_cast<int>(b.size())), "pi has a block at or above r");
  std::vector<int> a = phi_.ground(), b = pi_.ground(), both;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(both));
  require(both.empty(), "phi and pi overlap");
}

std::vector<int> RSetComposition::ground() const {
  std::vector<int> g = phi_.ground(), h = pi_.ground();
  g.insert(g.end(), h.begin(), h.end());
  std::sort(g.begin(), g.end());
  return g;
}

// ---- Permutation ---------------------------------------------------------------------

Permutation::Permutation(std::initializer_list<int> word)
    : Permutation(std::vector<int>(word)) {}

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  std::vector<int> s = word_;
  std::sort(s.begin(), s.end());
  require(is_initial_segment(s), "not a permutation of [n]");
}

Permutation Permutation::identity(int n) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(word_.size());
  for (std::size_t i = 0; i < word_.size(); ++i)
    inv[word_[i] - 1] = static_cast<int>(i) + 1;
  return Permutation(std::move(inv));
}

std::vector<int> Permutation::descents() const {
  std::vector<int> d;
  for (std::size_t i = 0; i + 1 < word_.size(); ++i)
    if (word_[i] > word_[i + 1]) d.push_back(static_cast<int>(i) + 1);
  return d;
}

// ---- compositions ------------------------------------------------------------------------

std::vector<int> descent_set(const Composition& alpha) {
  std::vector<int> s;
  int acc = 0;
  for (int i = 0; i + 1 < alpha.length(); ++i) s.push_back(acc += alpha[i]);
  return s;
}

Composition composition_from_descent_set(const std::vector<int>& set, int n) {
  std::vector<int> s = set;
  std::sort(s.begin(), s.end());
  std::vector<int> parts;
  int prev = 0;
  for (int x : s) {
    require(x > prev && x < n, "descent set out of range");
    parts.push_back(x - prev);
    prev = x;
  }
  if (n > 0) parts.push_back(n - prev);
  return Composition(std::move(parts));
}

bool coarsens(const Composition& alpha, const Composition& beta) {
  require(alpha.size() == beta.size(), "coarsens: size mismatch");
  auto a = descent_set(alpha), b = descent_set(beta);
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool dominance_leq(const Partition& mu, const Partition& lambda) {
  require(mu.size() == lambda.size(), "dominance: size mismatch");
  if (lambda.length() > mu.length()) return false;
  int a = 0, b = 0;
  for (int i = 0; i < mu.length(); ++i) {
    a += mu.parts()[i];
    if (i < lambda.length()) b += lambda.parts()[i];
    if (a > b) return false;
  }
  return true;
}

std::uint64_t parts_factorial(const Partition& lambda) {
  std::uint64_t f = 1;
  for (int p : lambda.parts()) f *= factorial(p);
  return f;
}

std::uint64_t multiplicities_factorial(const Partition& lambda) {
  std::map<int, int> mult;
  for (int p : lambda.parts()) ++mult[p];
  std::uint64_t f = 1;
  for (auto [part, m] : mult) f *= factorial(m);
  return f;
}

std::map<Composition, int> quasi_shuffle(const Composition& alpha,
                                         const Composition& beta) {
  const auto& a = alpha.parts();
  const auto& b = beta.parts();
  std::map<Composition, int> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, std::size_t i, std::size_t j) -> void {
    if (i == a.size() && j == b.size()) {
      ++out[Composition(cur)];
      return;
    }
    if (i < a.size()) {
      cur.push_back(a[i]);
      self(self, i + 1, j);
      cur.pop_back();
    }
    if (j < b.size()) {
      cur.push_back(b[j]);
      self(self, i, j + 1);
      cur.pop_back();
    }
    if (i < a.size() && j < b.size()) {
      cur.push_back(a[i] + b[j]);
      self(self, i + 1, j + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0, 0);
  return out;
}

// ---- standardization ----------------------------------------------------------------

Permutation standardize_word(const std::vector<int>& word) {
  std::vector<int> out(word.size());
  for (std::size_t i = 0; i < word.size(); ++i) {
    int r = 0;
    for (std::size_t j = 0; j < word.size(); ++j)
      if (word[j] < word[i] || (j <= i && word[j] == word[i])) ++r;
    out[i] = r;
  }
  return Permutation(std::move(out));
}

SetComposition standardize(const SetComposition& phi) {
  auto r = rank_map(phi.ground());
  std::vector<Block> blocks;
  for (const auto& b : phi.blocks()) blocks.push_back(relabel(b, r));
  return SetComposition(std::move(blocks));
}

SetPartition standardize(const SetPartition& pi) {
  auto r = rank_map(pi.ground());
  std::vector<Block> blocks;
  for (const auto& b : pi.blocks()) blocks.push_back(relabel(b, r));
  return SetPartition(std::move(blocks));
}

RSetComposition standardize(const RSetComposition& x) {
  auto r = rank_map(x.ground());
  std::vector<Block> phi, pi;
  for (const auto& b : x.phi().blocks()) phi.push_back(relabel(b, r));
  for (const auto& b : x.pi().blocks()) pi.push_back(relabel(b, r));
  return RSetComposition(x.r(), SetComposition(std::move(phi)),
                         SetPartition(std::move(pi)));
}

// ---- order relations -------------------------------------------------------------------

bool corrupts(const SetComposition& psi, const SetComposition& phi) {
  require(psi.ground() == phi.ground(), "corrupts: ground sets differ");
  std::size_t j = 0;
  for (const auto& target : psi.blocks()) {
    std::vector<int> acc;
    while (acc.size() < target.size() && j < phi.blocks().size()) {
      const auto& b = phi.blocks()[j++];
      acc.insert(acc.end(), b.begin(), b.end());
    }
    std::sort(acc.begin(), acc.end());
    if (acc != target) return false;
  }
  return j == phi.blocks().size();
}

bool reforms(const SetComposition& phi, const SetComposition& psi) {
  require(phi.ground() == psi.ground(), "reforms: ground sets differ");
  // Reading each psi block in increasing order, phi must cut the same word
  // at a superset of psi's cut points.
  std::size_t j = 0;
  for (const auto& source : psi.blocks()) {
    std::vector<int> acc;
    while (acc.size() < source.size() && j < phi.blocks().size()) {
      const auto& b = phi.blocks()[j++];
      acc.insert(acc.end(), b.begin(), b.end());
    }
    if (acc != source) return false;
  }
  return j == phi.blocks().size();
}

// ---- products on set compositions ------------------------------------------------------

std::vector<SetComposition> shifted_quasi_shuffle(const SetComposition& phi,
                                                  const SetComposition& psi) {
  require(is_initial_segment(phi.ground()) && is_initial_segment(psi.ground()),
          "shifted quasi-shuffle needs ground sets [n] and [m]");
  const int n = phi.size();
  const auto& a = phi.blocks();
  std::vector<Block> b;
  for (auto blk : psi.blocks()) {
    for (int& x : blk) x += n;
    b.push_back(std::move(blk));
  }
  std::vector<SetComposition> out;
  std::vector<Block> cur;
  auto rec = [&](auto&& self, std::size_t i, std::size_t j) -> void {
    if (i == a.size() && j == b.size()) {
      out.emplace_back(cur);
      return;
    }
    if (i < a.size()) {
      cur.push_back(a[i]);
      self(self, i + 1, j);
      cur.pop_back();
    }
    if (j < b.size()) {
      cur.push_back(b[j]);
      self(self, i, j + 1);
      cur.pop_back();
    }
    if (i < a.size() && j < b.size()) {
      Block merged = a[i];
      merged.insert(merged.end(), b[j].begin(), b[j].end());
      cur.push_back(std::move(merged));
      self(self, i + 1, j + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SetComposition> bar_shuffle(const SetComposition& phi,
                                        const SetPartition& pi) {
  {
    std::vector<int> a = phi.ground(), b = pi.ground(), both;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                          std::back_inserter(both));
    require(both.empty(), "bar_shuffle: ground sets overlap");
  }
  const auto& a = phi.blocks();
  std::vector<Block> b = pi.blocks();
  std::vector<SetComposition> out;
  std::vector<Block> cur;
  auto rec = [&](auto&& self, std::size_t i, std::size_t j) -> void {
    if (i == a.size() && j == b.size()) {
      out.emplace_back(cur);
      return;
    }
    if (i < a.size()) {
      cur.push_back(a[i]);
      self(self, i + 1, j);
      cur.pop_back();
    }
    if (j < b.size()) {
      cur.push_back(b[j]);
      self(self, i, j + 1);
      cur.pop_back();
    }
  };
  // b is sorted by minimum, so next_permutation visits every ordering once.
  do {
    rec(rec, 0, 0);
  } while (std::next_permutation(b.begin(), b.end()));
  std::sort(out.begin(), out.end());
  return out;
}

SetComposition restrict_to(const SetComposition& phi,
                           const std::vector<int>& subset) {
  std::set<int> keep(subset.begin(), subset.end());
  std::vector<Block> blocks;
  for (const auto& b : phi.blocks()) {
    Block nb;
    for (int x : b)
      if (keep.count(x)) nb.push_back(x);
    if (!nb.empty()) blocks.push_back(std::move(nb));
  }
  return SetComposition(std::move(blocks));
}

RSetComposition r_split(const SetComposition& upsilon, RLevel r) {
  std::vector<Block> phi, pi;
  for (const auto& b : upsilon.blocks())
    (r.admits(static_cast<int>(b.size())) ? phi : pi).push_back(b);
  return RSetComposition(r, SetComposition(std::move(phi)),
                         SetPartition(std::move(pi)));
}

SetPartition partition_meet(const SetPartition& pi, const SetPartition& omega) {
  require(pi.ground() == omega.ground(), "meet: ground sets differ");
  std::vector<Block> blocks;
  for (const auto& a : pi.blocks())
    for (const auto& b : omega.blocks()) {
      Block c;
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                            std::back_inserter(c));
      if (!c.empty()) blocks.push_back(std::move(c));
    }
  return SetPartition(std::move(blocks));
}

SetComposition descent_runs(const Permutation& sigma) {
  std::vector<Block> blocks;
  Block cur;
  for (int x : sigma.word()) {
    if (!cur.empty() && x < cur.back()) {
      blocks.push_back(std::move(cur));
      cur.clear();
    }
    cur.push_back(x);
  }
  if (!cur.empty()) blocks.push_back(std::move(cur));
  return SetComposition(std::move(blocks));
}

// ---- enumeration -----------------------------------------------------------------------------

std::vector<Composition> all_compositions(int n) {
  std::vector<Composition> out;
  if (n == 0) return {Composition()};
  for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
    std::vector<int> set;
    for (int i = 1; i < n; ++i)
      if (mask >> (i - 1) & 1u) set.push_back(i);
    out.push_back(composition_from_descent_set(set, n));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Partition> all_partitions(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rest, int maxpart) -> void {
    if (rest == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(rest, maxpart); p >= 1; --p) {
      cur.push_back(p);
      self(self, rest - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SetPartition> all_set_partitions(int n) {
  std::vector<SetPartition> out;
  std::vector<Block> cur;
  auto rec = [&](auto&& self, int x) -> void {
    if (x > n) {
      out.emplace_back(cur);
      return;
    }
    for (std::size_t i = 0; i < cur.size(); ++i) {
      cur[i].push_back(x);
      self(self, x + 1);
      cur[i].pop_back();
    }
    cur.push_back({x});
    self(self, x + 1);
    cur.pop_back();
  };
  rec(rec, 1);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SetComposition> all_set_compositions(int n) {
  std::vector<SetComposition> out;
  for (const auto& pi : all_set_partitions(n)) {
    std::vector<Block> b = pi.blocks();
    do {
      out.emplace_back(b);
    } while (std::next_permutation(b.begin(), b.end()));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<RComposition> all_r_compositions(int n, RLevel r) {
  std::vector<RComposition> out;
  for (int b = 0; b <= n; ++b)
    for (const auto& beta : all_compositions(b)) {
      bool ok = true;
      for (int p : beta.parts()) ok = ok && r.admits(p);
      if (!ok) continue;
      for (const auto& mu : all_partitions(n - b)) {
        bool ok2 = true;
        for (int p : mu.parts()) ok2 = ok2 && !r.admits(p);
        if (ok2) out.emplace_back(r, beta, mu);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<RSetComposition> all_r_set_compositions(int n, RLevel r) {
  std::set<RSetComposition> seen;
  for (const auto& u : all_set_compositions(n)) seen.insert(r_split(u, r));
  return {seen.begin(), seen.end()};
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  do {
    out.emplace_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

// ---- text -----------------------------------------------------------------------------------

std::string to_string(const Composition& alpha) {
  std::string s = "(";
  for (int i = 0; i < alpha.length(); ++i) {
    if (i) s += ',';
    s += std::to_string(alpha[i]);
  }
  return s + ")";
}

std::string to_string(const Partition& lambda) {
  return to_string(lambda.as_composition());
}

std::string to_string(const SetComposition& phi) {
  bool wide = needs_commas(phi.ground());
  std::string s = "(";
  for (int i = 0; i < phi.length(); ++i) {
    if (i) s += '|';
    s += join_block(phi.blocks()[i], wide);
  }
  return s + ")";
}

std::string to_string(const SetPartition& pi) {
  if (pi.empty()) return "{}";
  bool wide = needs_commas(pi.ground());
  std::string s;
  for (int i = 0; i < pi.length(); ++i) {
    if (i) s += '/';
    s += join_block(pi.blocks()[i], wide);
  }
  return s;
}

std::string to_string(const RSetComposition& x) {
  return "(" + to_string(x.phi()) + "," + to_string(x.pi()) + ")";
}

std::string to_string(const Permutation& sigma) {
  bool wide = sigma.size() >= 10;
  std::string s;
  for (int i = 0; i < sigma.size(); ++i) {
    if (wide && i) s += ',';
    s += std::to_string(sigma.word()[i]);
  }
  return s;
}

}  // namespace chromalg
