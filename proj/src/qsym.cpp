#include "chromalg/qsym.hpp"

#include <algorithm>
#include <set>

#include "chromalg/chromatic.hpp"
#include "chromalg/linalg.hpp"

namespace chromalg {

namespace {

std::vector<int> slice(const std::vector<int>& a, std::size_t lo, std::size_t hi) {
  return {a.begin() + lo, a.begin() + hi};
}

std::set<int> degrees(const QSymExpr& f) {
  std::set<int> d;
  for (const auto& [alpha, c] : f) d.insert(alpha.size());
  return d;
}

int max_t_degree(const QSymExpr& f) {
  int d = -1;
  for (const auto& [alpha, c] : f) d = std::max(d, c.degree());
  return d;
}

// Coordinates of the degree-n component of f at t^j, over all_compositions(n).
std::vector<mpq_class> coordinates(const QSymExpr& f,
                                   const std::vector<Composition>& index, int j) {
  std::vector<mpq_class> v;
  v.reserve(index.size());
  for (const auto& alpha : index) v.emplace_back(f.coeff(alpha).coeff(j));
  return v;
}

QSymExpr mono_product(const std::vector<QSymExpr>& factors) {
  QSymExpr acc = one();
  for (const auto& f : factors) acc = multiply(acc, f);
  return acc;
}

QSymExpr h_single(int k) {
  QSymExpr h;
  for (const auto& a : all_compositions(k)) h.add(a, 1);
  return h;
}

// Number of SSYT of shape lambda with content exactly alpha.
long kostka(const Partition& lambda, const Composition& alpha) {
  const auto& rows = lambda.parts();
  std::vector<std::vector<int>> t(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) t[i].assign(rows[i], 0);
  std::vector<int> left = alpha.parts();
  const int letters = alpha.length();
  long count = 0;
  auto rec = [&](auto&& self, std::size_t i, std::size_t j) -> void {
    if (i == rows.size()) {
      ++count;
      return;
    }
    if (j == t[i].size()) {
      self(self, i + 1, 0);
      return;
    }
    int lo = 1;
    if (j > 0) lo = std::max(lo, t[i][j - 1]);
    if (i > 0) lo = std::max(lo, t[i - 1][j] + 1);
    for (int v = lo; v <= letters; ++v) {
      if (left[v - 1] == 0) continue;
      --left[v - 1];
      t[i][j] = v;
      self(self, i, j + 1);
      ++left[v - 1];
    }
  };
  rec(rec, 0, 0);
  return count;
}

}  // namespace

// ---- Hopf structure ---------------------------------------------------------------

QSymExpr one() { return QSymExpr::single(Composition()); }

QSymExpr homogeneous_component(const QSymExpr& f, int degree) {
  return f.filter([&](const Composition& a) { return a.size() == degree; });
}

QSymExpr multiply(const QSymExpr& f, const QSymExpr& g) {
  QSymExpr out;
  for (const auto& [a, ca] : f)
    for (const auto& [b, cb] : g) {
      TPoly c = ca * cb;
      for (const auto& [gamma, mult] : quasi_shuffle(a, b))
        out.add(gamma, c * mpz_class(mult));
    }
  return out;
}

QSymTensor coproduct(const QSymExpr& f) {
  QSymTensor out;
  for (const auto& [a, c] : f) {
    const auto& p = a.parts();
    for (std::size_t i = 0; i <= p.size(); ++i)
      out.add({Composition(slice(p, 0, i)), Composition(slice(p, i, p.size()))}, c);
  }
  return out;
}

QSymTensor3 coproduct_left(const QSymTensor& x) {
  QSymTensor3 out;
  for (const auto& [key, c] : x)
    for (const auto& [lr, c2] : coproduct(QSymExpr::single(key.first)))
      out.add({lr.first, lr.second, key.second}, c * c2);
  return out;
}

QSymTensor3 coproduct_right(const QSymTensor& x) {
  QSymTensor3 out;
  for (const auto& [key, c] : x)
    for (const auto& [lr, c2] : coproduct(QSymExpr::single(key.second)))
      out.add({key.first, lr.first, lr.second}, c * c2);
  return out;
}

QSymTensor multiply(const QSymTensor& a, const QSymTensor& b) {
  QSymTensor out;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) {
      auto left = multiply(QSymExpr::single(ka.first), QSymExpr::single(kb.first));
      auto right = multiply(QSymExpr::single(ka.second), QSymExpr::single(kb.second));
      TPoly c = ca * cb;
      for (const auto& [l, cl] : left)
        for (const auto& [r, cr] : right) out.add({l, r}, c * cl * cr);
    }
  return out;
}

QSymTensor tensor(const QSymExpr& f, const QSymExpr& g) {
  QSymTensor out;
  for (const auto& [a, ca] : f)
    for (const auto& [b, cb] : g) out.add({a, b}, ca * cb);
  return out;
}

TPoly counit(const QSymExpr& f) { return f.coeff(Composition()); }

QSymExpr specialize_t(const QSymExpr& f) {
  return f.map_coeffs([](const TPoly& c) { return TPoly(c.at_one()); });
}

QSymTensor specialize_t(const QSymTensor& x) {
  return x.map_coeffs([](const TPoly& c) { return TPoly(c.at_one()); });
}

// ---- bases ------------------------------------------------------------------------------

QSymExpr basis_M(const Composition& alpha) { return QSymExpr::single(alpha); }

QSymExpr basis_F(const Composition& alpha) {
  std::vector<EdgeColouredDigraph> parts;
  for (int p : alpha.parts()) parts.push_back(atom(AtomKind::kQ, p));
  return specialize_t(expand(chain(SumKind::kSolid, parts)));
}

QSymExpr basis_Fbar(const Composition& alpha) {
  QSymExpr out;
  for (const auto& gamma : all_compositions(alpha.size()))
    if (coarsens(gamma, alpha)) out.add(gamma, 1);
  return out;
}

QSymExpr basis_sym(SymKind kind, const Partition& lambda) {
  const auto& parts = lambda.parts();
  switch (kind) {
    case SymKind::kM:
    case SymKind::kMAug: {
      QSymExpr out;
      std::vector<int> w = parts;
      std::sort(w.begin(), w.end());
      mpz_class scale = kind == SymKind::kMAug
                            ? mpz_class(std::to_string(multiplicities_factorial(lambda)))
                            : mpz_class(1);
      do {
        out.add(Composition(w), scale);
      } while (std::next_permutation(w.begin(), w.end()));
      return out;
    }
    case SymKind::kP: {
      std::vector<QSymExpr> f;
      for (int p : parts) f.push_back(basis_M(Composition{p}));
      return mono_product(f);
    }
    case SymKind::kE:
    case SymKind::kEAug: {
      std::vector<QSymExpr> f;
      for (int p : parts) f.push_back(basis_M(Composition(std::vector<int>(p, 1))));
      QSymExpr e = mono_product(f);
      if (kind == SymKind::kEAug)
        e *= TPoly(mpz_class(std::to_string(parts_factorial(lambda))));
      return e;
    }
    case SymKind::kH: {
      std::vector<QSymExpr> f;
      for (int p : parts) f.push_back(h_single(p));
      return mono_product(f);
    }
    case SymKind::kS: {
      QSymExpr out;
      for (const auto& alpha : all_compositions(lambda.size()))
        if (long k = kostka(lambda, alpha)) out.add(alpha, k);
      return out;
    }
  }
  return {};
}

EdgeColouredDigraph sym_digraph(SymKind kind, const Partition& lambda) {
  const auto& parts = lambda.parts();
  auto atoms = [&](AtomKind a) {
    std::vector<EdgeColouredDigraph> v;
    for (int p : parts) v.push_back(atom(a, p));
    return v;
  };
  switch (kind) {
    case SymKind::kM: {
      std::vector<EdgeColouredDigraph> groups;
      for (std::size_t i = 0; i < parts.size();) {
        std::size_t j = i;
        std::vector<EdgeColouredDigraph> same;
        while (j < parts.size() && parts[j] == parts[i]) same.push_back(atom(AtomKind::kC, parts[j++]));
        groups.push_back(chain(SumKind::kSolid, same));
        i = j;
      }
      return chain(SumKind::kDashed, groups);
    }
    case SymKind::kMAug: return chain(SumKind::kDashed, atoms(AtomKind::kC));
    case SymKind::kE: return chain(SumKind::kDisjoint, atoms(AtomKind::kP));
    case SymKind::kEAug: return chain(SumKind::kDisjoint, atoms(AtomKind::kK));
    case SymKind::kH: return chain(SumKind::kDisjoint, atoms(AtomKind::kQ));
    case SymKind::kP: return chain(SumKind::kDisjoint, atoms(AtomKind::kC));
    case SymKind::kS: return grid(lambda);
  }
  return {};
}

EdgeColouredDigraph r_digraph(RKind kind, const RComposition& x) {
  std::vector<EdgeColouredDigraph> left;
  for (int p : x.beta().parts()) left.push_back(atom(AtomKind::kC, p));
  const bool double_left = kind == RKind::kFbar || kind == RKind::kSbar;
  EdgeColouredDigraph l = chain(double_left ? SumKind::kDouble : SumKind::kSolid, left);
  EdgeColouredDigraph r;
  if (kind == RKind::kS || kind == RKind::kSbar) {
    r = grid(x.mu());
  } else {
    std::vector<EdgeColouredDigraph> right;
    for (int p : x.mu().parts()) right.push_back(atom(AtomKind::kC, p));
    r = chain(SumKind::kDashed, right);
  }
  return combine(SumKind::kDashed, l, r);
}

QSymExpr basis_r(RKind kind, const RComposition& x) {
  return specialize_t(expand(r_digraph(kind, x)));
}

bool in_qsym_r(const QSymExpr& f, RLevel r) {
  for (int n : degrees(f)) {
    const auto index = all_compositions(n);
    std::vector<std::vector<mpq_class>> columns;
    for (const auto& x : all_r_compositions(n, r))
      columns.push_back(coordinates(basis_r(RKind::kM, x), index, 0));
    const QSymExpr fn = homogeneous_component(f, n);
    for (int j = 0; j <= max_t_degree(fn); ++j)
      if (!solve_in_span(columns, coordinates(fn, index, j))) return false;
  }
  return true;
}

bool is_symmetric(const QSymExpr& f) {
  for (int n : degrees(f))
    for (const auto& alpha : all_compositions(n)) {
      auto sorted = alpha.parts();
      std::sort(sorted.begin(), sorted.end(), std::greater<>());
      if (!(f.coeff(alpha) == f.coeff(Composition(sorted)))) return false;
    }
  return true;
}

std::map<Partition, RationalTCoeff> to_sym_basis(const QSymExpr& f, SymKind kind) {
  if (!is_symmetric(f)) throw InvalidArgument("to_sym_basis: input is not symmetric");
  std::map<Partition, RationalTCoeff> out;
  for (int n : degrees(f)) {
    const auto index = all_compositions(n);
    const auto parts = all_partitions(n);
    std::vector<std::vector<mpq_class>> columns;
    for (const auto& lambda : parts)
      columns.push_back(coordinates(basis_sym(kind, lambda), index, 0));
    const QSymExpr fn = homogeneous_component(f, n);
    const int tdeg = max_t_degree(fn);
    for (int j = 0; j <= tdeg; ++j) {
      auto x = solve_in_span(columns, coordinates(fn, index, j));
      if (!x) throw InvalidArgument("to_sym_basis: not in the span");
      for (std::size_t i = 0; i < parts.size(); ++i) {
        if ((*x)[i] == 0) continue;
        auto& slot = out[parts[i]];
        slot.resize(tdeg + 1);
        slot[j] = (*x)[i];
      }
    }
  }
  return out;
}

QSymExpr to_basis(const QSymExpr& f, QBasis basis) {
  if (basis == QBasis::kM) return f;
  QSymExpr rest = f, out;
  while (!rest.is_zero()) {
    // Leading index: finest for Fbar, coarsest for F.
    auto lead = rest.begin();
    for (auto it = rest.begin(); it != rest.end(); ++it) {
      bool better = basis == QBasis::kFbar ? it->first.length() > lead->first.length()
                                           : it->first.length() < lead->first.length();
      if (better) lead = it;
    }
    const Composition alpha = lead->first;
    const TPoly c = lead->second;
    out.add(alpha, c);
    rest -= (basis == QBasis::kF ? basis_F(alpha) : basis_Fbar(alpha)) * c;
  }
  return out;
}

// ---- chromatic polynomial -----------------------------------------------------------------

RationalPoly::RationalPoly(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) {
  trim();
}

void RationalPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

mpq_class RationalPoly::eval(const mpq_class& p) const {
  mpq_class s = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) s = s * p + *it;
  return s;
}

RationalPoly& RationalPoly::operator+=(const RationalPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

RationalPoly operator*(const RationalPoly& a, const RationalPoly& b) {
  if (a.c_.empty() || b.c_.empty()) return {};
  std::vector<mpq_class> r(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  return RationalPoly(std::move(r));
}

std::string to_string(const RationalPoly& p) {
  const auto& c = p.coeffs();
  if (c.empty()) return "0";
  std::string s;
  for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) {
    if (c[i] == 0) continue;
    mpq_class mag = mpq_class(abs(c[i]));
    if (!s.empty()) s += c[i] < 0 ? "-" : "+";
    else if (c[i] < 0) s += "-";
    if (i == 0 || mag != 1) s += mag.get_str();
    if (i > 0) s += i == 1 ? "p" : "p^" + std::to_string(i);
  }
  return s;
}

mpz_class evaluate_ones(const QSymExpr& f, long p) {
  mpz_class total = 0;
  for (const auto& [alpha, c] : f) {
    mpz_class b;
    if (p < alpha.length()) continue;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(p),
                 static_cast<unsigned long>(alpha.length()));
    total += b * c.at_one();
  }
  return total;
}

RationalPoly chromatic_polynomial(const QSymExpr& f) {
  std::map<int, mpz_class> by_length;
  for (const auto& [alpha, c] : f) by_length[alpha.length()] += c.at_one();
  RationalPoly out;
  for (const auto& [k, c] : by_length) {
    // binom(p, k) = p (p-1) ... (p-k+1) / k!
    RationalPoly b(std::vector<mpq_class>{mpq_class(c)});
    mpz_class fact = 1;
    for (int i = 0; i < k; ++i) {
      b = b * RationalPoly(std::vector<mpq_class>{mpq_class(-i), mpq_class(1)});
      fact *= i + 1;
    }
    out += b * RationalPoly(std::vector<mpq_class>{mpq_class(1, 1) / mpq_class(fact)});
  }
  return out;
}

FamilyBasisReport family_basis(int n,
                               const std::function<EdgeColouredDigraph(int)>& family) {
  FamilyBasisReport rep;
  const auto index = all_compositions(n);
  RationalMatrix m;
  for (const auto& alpha : index) {
    std::vector<EdgeColouredDigraph> parts;
    for (int p : alpha.parts()) {
      EdgeColouredDigraph g = family(p);
      if (g.n() != p) throw InvalidArgument("family member has the wrong size");
      for (const auto& e : g.edges())
        if (e.kind != EdgeConstraint::kLeq)
          throw InvalidArgument("family members must use LEQ edges only");
      parts.push_back(std::move(g));
    }
    QSymExpr x = specialize_t(expand(chain(SumKind::kSolid, parts)));
    if (!(x.coeff(alpha) == TPoly(1))) {
      rep.leading_terms_ok = false;
      if (rep.failure.empty()) rep.failure = "coefficient of leading term at " + to_string(alpha);
    }
    for (const auto& [beta, c] : x)
      if (!(beta == alpha) && !coarsens(alpha, beta)) {
        rep.leading_terms_ok = false;
        if (rep.failure.empty())
          rep.failure = to_string(beta) + " does not refine " + to_string(alpha);
      }
    m.push_back(coordinates(x, index, 0));
    rep.elements.emplace_back(alpha, std::move(x));
  }
  rep.rank = rank(m);
  rep.invertible = rep.rank == static_cast<int>(index.size());
  return rep;
}

// ---- text ---------------------------------------------------------------------------------

namespace {

std::string coeff_prefix(const TPoly& c) {
  std::string s = to_string(c);
  if (s == "1") return "";
  if (s == "-1") return "-";
  if (c.is_constant()) return s;
  return "(" + s + ")";
}

std::string basis_term(const Composition& a) { return "M" + to_string(a); }

}  // namespace

std::string to_string(const QSymExpr& f) {
  if (f.is_zero()) return "0";
  std::string s;
  for (const auto& [a, c] : f) {
    std::string pre = coeff_prefix(c);
    if (!s.empty() && (pre.empty() || pre[0] != '-')) s += "+";
    s += pre + basis_term(a);
  }
  return s;
}

std::string to_string(const QSymTensor& x) {
  if (x.is_zero()) return "0";
  std::string s;
  for (const auto& [k, c] : x) {
    std::string pre = coeff_prefix(c);
    if (!s.empty() && (pre.empty() || pre[0] != '-')) s += "+";
    s += pre + basis_term(k.first) + "⊗" + basis_term(k.second);
  }
  return s;
}

}  // namespace chromalg
