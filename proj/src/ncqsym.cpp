#include "chromalg/ncqsym.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "chromalg/oracle.hpp"

namespace chromalg {

namespace {

SetComposition sub_composition(const SetComposition& phi, std::size_t lo, std::size_t hi) {
  return SetComposition(std::vector<Block>(phi.blocks().begin() + lo, phi.blocks().begin() + hi));
}

bool on_initial_segment(const std::vector<int>& ground) {
  for (std::size_t i = 0; i < ground.size(); ++i)
    if (ground[i] != static_cast<int>(i) + 1) return false;
  return true;
}

Block apply(const Permutation& sigma, const Block& b) {
  Block out;
  for (int x : b) out.push_back(sigma(x));
  return out;
}

std::string coeff_prefix(const TPoly& c) {
  std::string s = to_string(c);
  if (s == "1") return "";
  if (s == "-1") return "-";
  if (c.is_constant()) return s;
  return "(" + s + ")";
}

template <class Map, class Show>
std::string render(const Map& f, Show show) {
  if (f.is_zero()) return "0";
  std::string s;
  for (const auto& [k, c] : f) {
    std::string pre = coeff_prefix(c);
    if (!s.empty() && (pre.empty() || pre[0] != '-')) s += "+";
    s += pre + show(k);
  }
  return s;
}

std::vector<LabelledDigraph> labelled_atoms(AtomKind kind, const std::vector<Block>& blocks) {
  std::vector<LabelledDigraph> v;
  for (const auto& b : blocks) v.push_back(atom_labelled(kind, b));
  return v;
}

// Every permutation of [n] acting only inside the given blocks.
std::vector<Permutation> block_permutations(const SetPartition& blocks, int n) {
  std::vector<Permutation> out;
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  const auto& bs = blocks.blocks();
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == bs.size()) {
      out.emplace_back(w);
      return;
    }
    Block images = bs[i];
    do {
      for (std::size_t j = 0; j < bs[i].size(); ++j) w[bs[i][j] - 1] = images[j];
      self(self, i + 1);
    } while (std::next_permutation(images.begin(), images.end()));
    for (int x : bs[i]) w[x - 1] = x;
  };
  rec(rec, 0);
  return out;
}

}  // namespace

NCQSymExpr nc_one() { return NCQSymExpr::single(SetComposition()); }

NCQSymExpr specialize_t(const NCQSymExpr& f) {
  return f.map_coeffs([](const TPoly& c) { return TPoly(c.at_one()); });
}

NCTensor specialize_t(const NCTensor& x) {
  return x.map_coeffs([](const TPoly& c) { return TPoly(c.at_one()); });
}

NCQSymExpr expand_nc(const LabelledDigraph& lg) {
  const LabelledDigraph s = lg.standardized();
  const EdgeColouredDigraph& g = s.graph();
  if (g.n() == 0) return nc_one();
  const Contraction c = contract(g);
  if (!c.feasible) return {};
  const int ncls = static_cast<int>(c.weights.size());
  std::vector<Block> class_labels(ncls);
  for (int v = 0; v < g.n(); ++v) class_labels[c.class_of[v]].push_back(s.labels()[v]);
  std::map<SetComposition, std::vector<std::int64_t>> tally;
  for (int k = 1; k <= ncls; ++k)
    for_each_surjection(g, c, k, [&](const std::vector<int>& level, int asc) {
      std::vector<Block> blocks(k);
      for (int i = 0; i < ncls; ++i)
        blocks[level[i]].insert(blocks[level[i]].end(), class_labels[i].begin(),
                                class_labels[i].end());
      auto& slot = tally[SetComposition(std::move(blocks))];
      if (static_cast<int>(slot.size()) <= asc) slot.resize(asc + 1, 0);
      ++slot[asc];
    });
  NCQSymExpr out;
  for (const auto& [phi, counts] : tally) {
    std::vector<mpz_class> coeffs;
    for (auto x : counts) coeffs.emplace_back(static_cast<long>(x));
    out.add(phi, TPoly(std::move(coeffs)));
  }
  return out;
}

QSymExpr rho(const NCQSymExpr& f) {
  QSymExpr out;
  for (const auto& [phi, c] : f) out.add(phi.shape(), c);
  return out;
}

// ---- Hopf structure --------------------------------------------------------------------

NCQSymExpr multiply_nc(const NCQSymExpr& f, const NCQSymExpr& g) {
  NCQSymExpr out;
  for (const auto& [a, ca] : f)
    for (const auto& [b, cb] : g) {
      TPoly c = ca * cb;
      for (const auto& gamma : shifted_quasi_shuffle(a, b)) out.add(gamma, c);
    }
  return out;
}

NCTensor coproduct_nc(const NCQSymExpr& f) {
  NCTensor out;
  for (const auto& [phi, c] : f)
    for (int t = 0; t <= phi.length(); ++t)
      out.add({standardize(sub_composition(phi, 0, t)),
               standardize(sub_composition(phi, t, phi.length()))},
              c);
  return out;
}

NCTensor3 coproduct_nc_left(const NCTensor& x) {
  NCTensor3 out;
  for (const auto& [key, c] : x)
    for (const auto& [lr, c2] : coproduct_nc(NCQSymExpr::single(key.first)))
      out.add({lr.first, lr.second, key.second}, c * c2);
  return out;
}

NCTensor3 coproduct_nc_right(const NCTensor& x) {
  NCTensor3 out;
  for (const auto& [key, c] : x)
    for (const auto& [lr, c2] : coproduct_nc(NCQSymExpr::single(key.second)))
      out.add({key.first, lr.first, lr.second}, c * c2);
  return out;
}

NCTensor multiply_nc(const NCTensor& a, const NCTensor& b) {
  NCTensor out;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) {
      TPoly c = ca * cb;
      for (const auto& l : shifted_quasi_shuffle(ka.first, kb.first))
        for (const auto& r : shifted_quasi_shuffle(ka.second, kb.second)) out.add({l, r}, c);
    }
  return out;
}

NCTensor tensor_nc(const NCQSymExpr& f, const NCQSymExpr& g) {
  NCTensor out;
  for (const auto& [a, ca] : f)
    for (const auto& [b, cb] : g) out.add({a, b}, ca * cb);
  return out;
}

NCTensor coproduct_nc_digraph(const LabelledDigraph& g) {
  NCTensor out;
  const std::uint32_t all = g.n() == 0 ? 0u : (1u << g.n()) - 1u;
  for (std::uint32_t s : closed_subsets(g.graph())) {
    auto low = expand_nc(induced(g, mask_vertices(all & ~s)));
    auto high = expand_nc(induced(g, mask_vertices(s)));
    out += tensor_nc(specialize_t(low), specialize_t(high));
  }
  return out;
}

// ---- bases --------------------------------------------------------------------------------

NCQSymExpr basis_nc(NCBasis kind, const SetComposition& phi) {
  if (!on_initial_segment(phi.ground()))
    throw InvalidArgument("basis_nc: ground set must be [n]");
  NCQSymExpr out;
  const auto& bs = phi.blocks();
  switch (kind) {
    case NCBasis::kM:
      out.add(phi, 1);
      break;
    case NCBasis::kF: {
      // Cut every block, read increasingly, at any subset of its gaps.
      std::vector<Block> cur;
      auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == bs.size()) {
          out.add(SetComposition(cur), 1);
          return;
        }
        const Block& b = bs[i];
        const std::uint32_t gaps = static_cast<std::uint32_t>(b.size()) - 1;
        for (std::uint32_t mask = 0; mask < (1u << gaps); ++mask) {
          std::size_t pushed = 0;
          Block seg{b[0]};
          for (std::size_t j = 1; j < b.size(); ++j) {
            if (mask >> (j - 1) & 1u) {
              cur.push_back(seg);
              ++pushed;
              seg.clear();
            }
            seg.push_back(b[j]);
          }
          cur.push_back(seg);
          ++pushed;
          self(self, i + 1);
          cur.resize(cur.size() - pushed);
        }
      };
      rec(rec, 0);
      break;
    }
    case NCBasis::kFbar: {
      if (bs.empty()) {
        out.add(phi, 1);
        break;
      }
      const std::uint32_t gaps = static_cast<std::uint32_t>(bs.size()) - 1;
      for (std::uint32_t mask = 0; mask < (1u << gaps); ++mask) {
        std::vector<Block> merged{bs[0]};
        for (std::size_t j = 1; j < bs.size(); ++j) {
          if (mask >> (j - 1) & 1u)
            merged.back().insert(merged.back().end(), bs[j].begin(), bs[j].end());
          else
            merged.push_back(bs[j]);
        }
        out.add(SetComposition(std::move(merged)), 1);
      }
      break;
    }
  }
  return out;
}

NCQSymExpr to_basis_nc(const NCQSymExpr& f, NCBasis basis) {
  if (basis == NCBasis::kM) return f;
  // F-expansions add only finer terms, F-bar-expansions only coarser ones.
  auto rank = [&](const SetComposition& phi) {
    return basis == NCBasis::kF ? phi.size() * 64 + static_cast<int>(phi.blocks().size())
                                : phi.size() * 64 - static_cast<int>(phi.blocks().size());
  };
  NCQSymExpr rest = f, out;
  while (!rest.is_zero()) {
    auto best = rest.begin();
    for (auto it = rest.begin(); it != rest.end(); ++it)
      if (rank(it->first) < rank(best->first)) best = it;
    const SetComposition phi = best->first;
    const TPoly c = best->second;
    out.add(phi, c);
    rest -= basis_nc(basis, phi) * c;
  }
  return out;
}

LabelledDigraph nc_digraph(NCBasis kind, const SetComposition& phi) {
  switch (kind) {
    case NCBasis::kM: return chain_labelled(SumKind::kSolid, labelled_atoms(AtomKind::kC, phi.blocks()));
    case NCBasis::kF: return chain_labelled(SumKind::kSolid, labelled_atoms(AtomKind::kQ, phi.blocks()));
    case NCBasis::kFbar: return chain_labelled(SumKind::kDouble, labelled_atoms(AtomKind::kC, phi.blocks()));
  }
  return {};
}

NCQSymExpr ncsym_m(const SetPartition& pi) {
  NCQSymExpr out;
  std::vector<Block> b = pi.blocks();
  do {
    out.add(SetComposition(b), 1);
  } while (std::next_permutation(b.begin(), b.end()));
  return out;
}

// These bases live at t = 1.
NCQSymExpr basis_ncsym(NCSymKind kind, const SetPartition& pi) {
  const auto& bs = pi.blocks();
  switch (kind) {
    case NCSymKind::kM:
      return specialize_t(
          expand_nc(chain_labelled(SumKind::kDashed, labelled_atoms(AtomKind::kC, bs))));
    case NCSymKind::kP:
      return expand_nc(chain_labelled(SumKind::kDisjoint, labelled_atoms(AtomKind::kC, bs)));
    case NCSymKind::kE:
      return specialize_t(
          expand_nc(chain_labelled(SumKind::kDisjoint, labelled_atoms(AtomKind::kK, bs))));
    case NCSymKind::kH:
      return specialize_t(symmetrize_within(
          chain_labelled(SumKind::kDisjoint, labelled_atoms(AtomKind::kQ, bs)), pi));
    case NCSymKind::kS:
      return specialize_t(symmetrize(grid_labelled(pi.shape())));
  }
  return {};
}

NCQSymExpr ncsym_e_from_paths(const SetPartition& pi) {
  return specialize_t(symmetrize_within(
      chain_labelled(SumKind::kDisjoint, labelled_atoms(AtomKind::kP, pi.blocks())), pi));
}

NCQSymExpr ncsym_h_from_meet(const SetPartition& pi) {
  NCQSymExpr out;
  for (const auto& omega : all_set_partitions(pi.size())) {
    mpz_class f(std::to_string(parts_factorial(partition_meet(omega, pi).shape())));
    out += ncsym_m(omega) * TPoly(f);
  }
  return out;
}

NCQSymExpr relabel(const NCQSymExpr& f, const Permutation& sigma) {
  NCQSymExpr out;
  for (const auto& [phi, c] : f) {
    std::vector<Block> blocks;
    for (const auto& b : phi.blocks()) blocks.push_back(apply(sigma, b));
    out.add(SetComposition(std::move(blocks)), c);
  }
  return out;
}

NCQSymExpr symmetrize(const LabelledDigraph& g) {
  if (g.n() > 5) throw InvalidArgument("symmetrize: at most 5 vertices");
  const NCQSymExpr base = expand_nc(g);
  NCQSymExpr out;
  for (const auto& sigma : all_permutations(g.n())) out += relabel(base, sigma);
  return out;
}

NCQSymExpr symmetrize_within(const LabelledDigraph& g, const SetPartition& blocks) {
  const LabelledDigraph s = g.standardized();
  if (!(s.labels() == g.labels()))
    throw InvalidArgument("symmetrize_within: labels must be [n]");
  const NCQSymExpr base = expand_nc(g);
  NCQSymExpr out;
  for (const auto& sigma : block_permutations(blocks, g.n())) out += relabel(base, sigma);
  return out;
}

bool is_ncsym(const NCQSymExpr& f) {
  for (const auto& [phi, c] : f) {
    std::vector<Block> b = phi.blocks();
    std::sort(b.begin(), b.end());
    do {
      if (!(f.coeff(SetComposition(b)) == c)) return false;
    } while (std::next_permutation(b.begin(), b.end()));
  }
  return true;
}

NCSymCoords to_m_coordinates(const NCQSymExpr& f) {
  if (!is_ncsym(f)) throw InvalidArgument("to_m_coordinates: not in NCSym");
  NCSymCoords out;
  for (const auto& [phi, c] : f) {
    SetPartition pi(phi.blocks());
    if (out.coeff(pi).is_zero()) out.add(pi, c);
  }
  return out;
}

// ---- Malvenuto-Reutenauer -------------------------------------------------------------------

NCQSymExpr mr_F(const Permutation& sigma) {
  return basis_nc(NCBasis::kF, descent_runs(sigma));
}

bool mr_inject_check(const Permutation& sigma, const Permutation& tau, std::string* failure) {
  auto fail = [&](const std::string& why) {
    if (failure) *failure = why;
    return false;
  };
  const int n = sigma.size() + tau.size();
  const int k = std::max(n, 1);
  const oracle::WordPoly product =
      oracle::multiply(oracle::mr_word_F(sigma, k), oracle::mr_word_F(tau, k));
  // Each word lies in exactly one F_gamma, found by standardizing it.
  std::map<Permutation, TPoly> coeff;
  for (const auto& [w, c] : product.terms) {
    Permutation gamma = standardize_word(w).inverse();
    auto [it, fresh] = coeff.try_emplace(gamma, c);
    if (!fresh && !(it->second == c))
      return fail("word product is not constant on the class of " + to_string(gamma));
  }
  oracle::WordPoly rebuilt{k, {}};
  NCQSymExpr image;
  for (const auto& [gamma, c] : coeff) {
    auto words = oracle::mr_word_F(gamma, k);
    for (const auto& [w, one] : words.terms) rebuilt.terms.add(w, one * c);
    image += mr_F(gamma) * c;
  }
  if (auto cmp = oracle::assert_equal(rebuilt, product); !cmp.equal)
    return fail("F decomposition of the word product is inexact at " + cmp.first_difference);
  const NCQSymExpr direct = multiply_nc(mr_F(sigma), mr_F(tau));
  if (!(image == direct))
    return fail("image of product " + to_string(image) + " differs from " + to_string(direct));
  return true;
}

// ---- r-level ----------------------------------------------------------------------------------

NCQSymExpr basis_ncr(NCRKind kind, const RSetComposition& x) {
  NCQSymExpr out;
  if (kind == NCRKind::kM) {
    for (const auto& psi : bar_shuffle(x.phi(), x.pi())) out.add(psi, 1);
    return out;
  }
  // Sum of M_(Psi, Pi) over Psi obtained from phi by removing bars.
  const auto& bs = x.phi().blocks();
  if (bs.empty()) return basis_ncr(NCRKind::kM, x);
  const std::uint32_t gaps = static_cast<std::uint32_t>(bs.size()) - 1;
  for (std::uint32_t mask = 0; mask < (1u << gaps); ++mask) {
    std::vector<Block> merged{bs[0]};
    for (std::size_t j = 1; j < bs.size(); ++j) {
      if (mask >> (j - 1) & 1u)
        merged.back().insert(merged.back().end(), bs[j].begin(), bs[j].end());
      else
        merged.push_back(bs[j]);
    }
    out += basis_ncr(NCRKind::kM, RSetComposition(x.r(), SetComposition(std::move(merged)), x.pi()));
  }
  return out;
}

LabelledDigraph ncr_digraph(NCRKind kind, const RSetComposition& x) {
  LabelledDigraph left = chain_labelled(kind == NCRKind::kM ? SumKind::kSolid : SumKind::kDouble,
                                        labelled_atoms(AtomKind::kC, x.phi().blocks()));
  LabelledDigraph right =
      chain_labelled(SumKind::kDashed, labelled_atoms(AtomKind::kC, x.pi().blocks()));
  return combine_labelled(SumKind::kDashed, left, right, false);
}

RCoords r_regroup(const NCQSymExpr& f, RLevel r) {
  RCoords out;
  for (const auto& [psi, c] : f) {
    RSetComposition x = r_split(psi, r);
    if (!out.coeff(x).is_zero()) continue;
    for (const auto& member : bar_shuffle(x.phi(), x.pi()))
      if (!(f.coeff(member) == c))
        throw RegroupFailure("fiber of " + to_string(x) + ": " + to_string(psi) + " has " +
                             to_string(c) + " but " + to_string(member) + " has " +
                             to_string(f.coeff(member)));
    out.add(x, c);
  }
  return out;
}

RTensor r_regroup(const NCTensor& x, RLevel r) {
  std::map<SetComposition, NCQSymExpr> rights;
  for (const auto& [key, c] : x) rights[key.first].add(key.second, c);
  std::map<RSetComposition, NCQSymExpr> lefts;
  for (const auto& [left, right] : rights)
    for (const auto& [ry, c] : r_regroup(right, r)) lefts[ry].add(left, c);
  RTensor out;
  for (const auto& [ry, col] : lefts)
    for (const auto& [rx, c] : r_regroup(col, r)) out.add({rx, ry}, c);
  return out;
}

bool in_ncqsym_r(const NCQSymExpr& f, RLevel r) {
  try {
    r_regroup(f, r);
    return true;
  } catch (const RegroupFailure&) {
    return false;
  }
}

NCQSymExpr embed(const RCoords& f) {
  NCQSymExpr out;
  for (const auto& [x, c] : f) out += basis_ncr(NCRKind::kM, x) * c;
  return out;
}

// ---- text ----------------------------------------------------------------------------------------

std::string to_string(const NCQSymExpr& f) {
  return render(f, [](const SetComposition& k) { return "M" + to_string(k); });
}

std::string to_string(const NCTensor& x) {
  return render(x, [](const auto& k) {
    return "M" + to_string(k.first) + "⊗M" + to_string(k.second);
  });
}

std::string to_string(const NCSymCoords& f) {
  return render(f, [](const SetPartition& k) { return "m_" + to_string(k); });
}

std::string to_string(const RCoords& f) {
  return render(f, [](const RSetComposition& k) { return "M" + to_string(k); });
}

std::string to_string(const RTensor& x) {
  return render(x, [](const auto& k) {
    return "M" + to_string(k.first) + "⊗M" + to_string(k.second);
  });
}

}  // namespace chromalg
