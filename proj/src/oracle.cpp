#include "chromalg/oracle.hpp"

#include <algorithm>
#include <functional>

namespace chromalg::oracle {

namespace {

kernels::EdgeArrays edge_arrays(const EdgeColouredDigraph& g) {
  kernels::EdgeArrays e;
  for (const auto& x : g.edges()) {
    e.from.push_back(x.from);
    e.to.push_back(x.to);
    e.kind.push_back(static_cast<std::int32_t>(x.kind));
  }
  return e;
}

// Runs visit(colouring, asc) over every proper colouring V -> [k].
void scan_colourings(const EdgeColouredDigraph& g, int k, kernels::Kernel which,
                     const std::function<void(const std::vector<int>&, int)>& visit) {
  const int n = g.n();
  if (n == 0) {
    visit({}, 0);
    return;
  }
  if (k < 1) return;
  const auto edges = edge_arrays(g);
  const auto scan = kernels::kernel(which);
  constexpr int B = kernels::kBatch;
  std::vector<std::int32_t> colours(static_cast<std::size_t>(n) * B), valid(B), asc(B);
  std::vector<std::vector<int>> lanes(B, std::vector<int>(n));
  std::vector<int> odo(n, 1);
  bool done = false;
  while (!done) {
    int filled = 0;
    while (filled < B && !done) {
      lanes[filled] = odo;
      for (int v = 0; v < n; ++v) colours[v * B + filled] = odo[v];
      ++filled;
      int i = 0;
      while (i < n && ++odo[i] > k) odo[i++] = 1;
      done = i == n;
    }
    for (int lane = filled; lane < B; ++lane)
      for (int v = 0; v < n; ++v) colours[v * B + lane] = colours[v * B];
    scan(edges, colours.data(), valid.data(), asc.data());
    for (int lane = 0; lane < filled; ++lane)
      if (valid[lane]) visit(lanes[lane], asc[lane]);
  }
}

template <class Key>
Comparison compare(const LinearCombination<Key>& a, const LinearCombination<Key>& b,
                   const std::function<std::string(const Key&)>& show) {
  Comparison c;
  auto ia = a.begin(), ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    const Key* key;
    TPoly ca, cb;
    if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
      key = &ia->first;
      ca = ia->second;
      ++ia;
    } else if (ia == a.end() || ib->first < ia->first) {
      key = &ib->first;
      cb = ib->second;
      ++ib;
    } else {
      key = &ia->first;
      ca = ia->second;
      cb = ib->second;
      ++ia;
      ++ib;
    }
    if (!(ca == cb)) {
      c.equal = false;
      c.first_difference = show(*key) + ": " + to_string(ca) + " vs " + to_string(cb);
      return c;
    }
  }
  return c;
}

std::string show_vector(const std::vector<int>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

// Calls visit on each strictly increasing tuple of length len over [k].
void increasing_tuples(int len, int k, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> idx;
  auto rec = [&](auto&& self, int next) -> void {
    if (static_cast<int>(idx.size()) == len) {
      visit(idx);
      return;
    }
    for (int i = next; i <= k - (len - static_cast<int>(idx.size())) + 1; ++i) {
      idx.push_back(i);
      self(self, i + 1);
      idx.pop_back();
    }
  };
  rec(rec, 1);
}

}  // namespace

TruncPoly direct_expand(const EdgeColouredDigraph& g, int k, kernels::Kernel kernel) {
  TruncPoly out{k, {}};
  scan_colourings(g, k, kernel, [&](const std::vector<int>& col, int asc) {
    std::vector<int> expo(k, 0);
    for (int c : col) ++expo[c - 1];
    out.terms.add(expo, TPoly::monomial(asc));
  });
  return out;
}

WordPoly direct_expand_nc(const LabelledDigraph& g, int k, kernels::Kernel kernel) {
  const LabelledDigraph s = g.standardized();
  WordPoly out{k, {}};
  scan_colourings(s.graph(), k, kernel, [&](const std::vector<int>& col, int asc) {
    std::vector<int> word(col.size());
    for (std::size_t v = 0; v < col.size(); ++v) word[s.labels()[v] - 1] = col[v];
    out.terms.add(word, TPoly::monomial(asc));
  });
  return out;
}

TruncPoly realize(const QSymExpr& f, int k) {
  TruncPoly out{k, {}};
  for (const auto& [alpha, c] : f)
    increasing_tuples(alpha.length(), k, [&](const std::vector<int>& idx) {
      std::vector<int> expo(k, 0);
      for (std::size_t j = 0; j < idx.size(); ++j) expo[idx[j] - 1] = alpha[j];
      out.terms.add(expo, c);
    });
  return out;
}

WordPoly realize_nc(const NCQSymExpr& f, int k) {
  WordPoly out{k, {}};
  for (const auto& [phi, c] : f)
    increasing_tuples(phi.length(), k, [&](const std::vector<int>& idx) {
      std::vector<int> word(phi.size());
      for (std::size_t j = 0; j < idx.size(); ++j)
        for (int pos : phi.blocks()[j]) word[pos - 1] = idx[j];
      out.terms.add(word, c);
    });
  return out;
}

TruncPoly multiply(const TruncPoly& a, const TruncPoly& b) {
  if (a.k != b.k) throw InvalidArgument("oracle multiply: variable counts differ");
  TruncPoly out{a.k, {}};
  for (const auto& [ea, ca] : a.terms)
    for (const auto& [eb, cb] : b.terms) {
      std::vector<int> e(a.k);
      for (int i = 0; i < a.k; ++i) e[i] = ea[i] + eb[i];
      out.terms.add(e, ca * cb);
    }
  return out;
}

WordPoly multiply(const WordPoly& a, const WordPoly& b) {
  if (a.k != b.k) throw InvalidArgument("oracle multiply: alphabets differ");
  WordPoly out{a.k, {}};
  for (const auto& [wa, ca] : a.terms)
    for (const auto& [wb, cb] : b.terms) {
      std::vector<int> w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      out.terms.add(w, ca * cb);
    }
  return out;
}

WordPoly mr_word_F(const Permutation& sigma, int k) {
  const int n = sigma.size();
  const Permutation target = sigma.inverse();
  WordPoly out{k, {}};
  if (n == 0) {
    out.terms.add({}, 1);
    return out;
  }
  std::vector<int> w(n, 1);
  while (true) {
    if (standardize_word(w) == target) out.terms.add(w, 1);
    int i = n - 1;
    while (i >= 0 && ++w[i] > k) w[i--] = 1;
    if (i < 0) break;
  }
  return out;
}

Comparison assert_equal(const TruncPoly& a, const TruncPoly& b) {
  if (a.k != b.k) return {false, "variable counts differ"};
  return compare<std::vector<int>>(a.terms, b.terms, [](const std::vector<int>& e) {
    return "x^" + show_vector(e);
  });
}

Comparison assert_equal(const WordPoly& a, const WordPoly& b) {
  if (a.k != b.k) return {false, "alphabets differ"};
  return compare<std::vector<int>>(a.terms, b.terms, [](const std::vector<int>& w) {
    return "word " + show_vector(w);
  });
}

TruncPoly tableau_poly(const std::vector<int>& shape, int k, TableauRule rule) {
  std::vector<std::vector<int>> cells(shape.size());
  std::vector<std::pair<int, int>> order;
  for (std::size_t r = 0; r < shape.size(); ++r) {
    cells[r].assign(shape[r], 0);
    for (int c = 0; c < shape[r]; ++c) order.push_back({static_cast<int>(r), c});
  }
  const bool row_strict = rule == TableauRule::kRowStrictImmaculate;
  TruncPoly out{k, {}};
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == order.size()) {
      std::vector<int> e(k, 0);
      for (const auto& row : cells)
        for (int v : row) ++e[v - 1];
      out.terms.add(e, 1);
      return;
    }
    auto [r, c] = order[i];
    for (int v = 1; v <= k; ++v) {
      if (c > 0 && (row_strict ? v <= cells[r][c - 1] : v < cells[r][c - 1])) continue;
      if (r > 0) {
        if (rule == TableauRule::kSemistandard) {
          if (c < static_cast<int>(cells[r - 1].size()) && v <= cells[r - 1][c]) continue;
        } else if (c == 0) {
          if (row_strict ? v < cells[r - 1][0] : v <= cells[r - 1][0]) continue;
        }
      }
      cells[r][c] = v;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace chromalg::oracle
