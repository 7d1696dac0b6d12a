#include "ficat/shift.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "ficat/error.hpp"

namespace ficat {

namespace {

std::vector<int> omit(int k, int i) {
  std::vector<int> pos;
  for (int j = 0; j < k; ++j)
    if (j != i) pos.push_back(j);
  return pos;
}

int parity_sign(const std::vector<int>& perm) {
  int inv = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) ++inv;
  return inv % 2 ? -1 : 1;
}

template <class Map>
void add_term(Map& m, const typename Map::key_type& key, const typename Map::mapped_type& c) {
  auto [it, fresh] = m.try_emplace(key, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) m.erase(it);
  }
}

using IndexMap = std::map<Morphism, std::uint32_t>;

IndexMap index_map(const std::vector<Morphism>& v) {
  IndexMap out;
  for (std::uint32_t i = 0; i < v.size(); ++i) out.emplace(v[i], i);
  return out;
}

std::uint32_t lookup(const IndexMap& m, const Morphism& f) {
  auto it = m.find(f);
  if (it == m.end()) throw InvariantViolation("shift complex: boundary term outside the chain basis");
  return it->second;
}

CoefVec column_of(const KOps& ops, const std::map<Morphism, long long>& terms, const IndexMap& idx) {
  std::vector<std::pair<std::uint32_t, Rational>> t;
  for (const auto& [m, c] : terms) t.emplace_back(lookup(idx, m), ops.from_int(c));
  return collect(ops, std::move(t));
}

void require_symmetric(const Category& cat, ShiftVariant v) {
  if ((v == ShiftVariant::Double || v == ShiftVariant::Triple) && !cat.symmetric())
    throw PreconditionError("asymmetric", to_string(v) + " shift needs a symmetric structure on " + cat.name());
}

}  // namespace

ShiftVariant parse_shift_variant(const std::string& s) {
  if (s == "plain" || s == "sigma") return ShiftVariant::Plain;
  if (s == "prime") return ShiftVariant::Prime;
  if (s == "double") return ShiftVariant::Double;
  if (s == "triple") return ShiftVariant::Triple;
  throw PreconditionError("bad_variant", "unknown shift variant '" + s + "'");
}

std::string to_string(ShiftVariant v) {
  switch (v) {
    case ShiftVariant::Plain: return "plain";
    case ShiftVariant::Prime: return "prime";
    case ShiftVariant::Double: return "double";
    case ShiftVariant::Triple: return "triple";
  }
  return "?";
}

std::size_t rank_in_field(const CoefField& k, const std::vector<CoefVec>& vectors) {
  return with_field(k, [&](auto ops) {
    using Ops = decltype(ops);
    Echelon<Ops> e(ops);
    for (const auto& v : vectors) {
      SparseVec<Ops> w;
      w.reserve(v.size());
      for (const auto& [i, c] : v) w.emplace_back(i, ops.from_rational(c));
      e.insert(std::move(w));
    }
    return e.rank();
  });
}

// ---------------------------------------------------------------- orbits

ShiftOrbits::ShiftOrbits(CategoryPtr cat, int d, ShiftVariant v) : cat_(std::move(cat)), d_(d), v_(v) {
  if (d < 0) throw PreconditionError("bad_rank", "negative module degree");
  require_symmetric(*cat_, v);
}

const std::vector<std::pair<Morphism, int>>& ShiftOrbits::group(int p) const {
  std::lock_guard lock(mu_);
  auto it = groups_.find(p);
  if (it != groups_.end()) return it->second;
  const auto& cat = *cat_;
  std::vector<std::pair<Morphism, int>> perms, diag;
  bool use_perm = v_ == ShiftVariant::Double || v_ == ShiftVariant::Triple;
  bool use_aut = v_ == ShiftVariant::Prime || v_ == ShiftVariant::Triple;
  std::vector<int> sigma(p);
  std::iota(sigma.begin(), sigma.end(), 0);
  do {
    std::vector<int> pos = sigma;
    for (int j = p; j < p + d_; ++j) pos.push_back(j);
    perms.emplace_back(cat.factor_map(p + d_, pos), parity_sign(sigma));
  } while (use_perm && std::next_permutation(sigma.begin(), sigma.end()));
  if (use_aut && p > 0) {
    std::vector<Morphism> tuples{cat.aut(1).begin(), cat.aut(1).end()};
    for (int j = 1; j < p; ++j) {
      std::vector<Morphism> next;
      for (const auto& t : tuples)
        for (const auto& a : cat.aut(1)) next.push_back(cat.sum(t, a));
      tuples = std::move(next);
    }
    for (const auto& t : tuples) diag.emplace_back(d_ ? cat.sum(t, cat.identity(d_)) : t, 1);
  } else {
    diag.emplace_back(cat.identity(p + d_), 1);
  }
  std::vector<std::pair<Morphism, int>> g;
  for (const auto& [s, ss] : perms)
    for (const auto& [a, sa] : diag) g.emplace_back(cat.compose(s, a), ss * sa);
  return groups_.emplace(p, std::move(g)).first->second;
}

std::pair<Morphism, int> ShiftOrbits::canonical(int p, const Morphism& phi) const {
  if (v_ == ShiftVariant::Plain) return {phi, 1};
  const auto& g = group(p);
  Morphism best = cat_->compose(phi, g.front().first);
  int sign = g.front().second;
  bool clash = false;
  for (std::size_t i = 1; i < g.size(); ++i) {
    Morphism psi = cat_->compose(phi, g[i].first);
    if (psi < best) {
      best = std::move(psi);
      sign = g[i].second;
      clash = false;
    } else if (psi == best && g[i].second != sign) {
      clash = true;
    }
  }
  return {best, clash ? 0 : sign};
}

std::map<Morphism, long long> ShiftOrbits::boundary(int p, const Morphism& phi) const {
  std::map<Morphism, long long> out;
  for (int i = 0; i < p; ++i) {
    Morphism face = cat_->compose(phi, cat_->factor_map(p + d_, omit(p + d_, i)));
    auto [rep, s] = canonical(p - 1, face);
    if (s) add_term(out, rep, static_cast<long long>(i % 2 ? -s : s));
  }
  return out;
}

Morphism ShiftOrbits::homotopy(int p, const Morphism& phi) const {
  int k = p + d_;
  std::vector<int> pos{k};
  for (int j = 0; j < k; ++j) pos.push_back(j);
  return cat_->compose(cat_->sum(phi, cat_->identity(1)), cat_->factor_map(k + 1, pos));
}

Morphism ShiftOrbits::stabilize(const Morphism& phi) const {
  return cat_->compose(cat_->canonical(phi.dst, phi.dst + 1), phi);
}

std::vector<Morphism> ShiftOrbits::representatives(int n, int p) const {
  if (p + d_ > n) return {};
  if (v_ == ShiftVariant::Plain) return cat_->hom(p + d_, n);
  std::set<Morphism> reps;
  for (const auto& phi : cat_->hom(p + d_, n)) {
    auto [rep, s] = canonical(p, phi);
    if (s) reps.insert(std::move(rep));
  }
  return {reps.begin(), reps.end()};
}

// ---------------------------------------------------------------- complexes

ShiftComplex ShiftComplex::of_representable(CategoryPtr cat, int d, ShiftVariant v, int max_rank, CoefField k, int q) {
  ShiftOrbits orbits(cat, d, v);
  ShiftComplex c;
  c.variant_ = v;
  c.cat_name_ = cat->name();
  c.module_name_ = "P" + std::to_string(d);
  c.field_ = k;
  c.max_rank_ = max_rank;
  c.q_ = q < 0 ? max_rank : q;
  KOps ops{k};
  for (int n = 0; n <= max_rank; ++n) {
    std::vector<std::vector<Morphism>> reps;
    std::vector<IndexMap> idx;
    for (int p = 0; p <= c.q_ + 1; ++p) {
      reps.push_back(orbits.representatives(n, p));
      idx.push_back(index_map(reps.back()));
    }
    std::vector<std::size_t> dims;
    std::vector<ChainMap> ds(c.q_ + 2);
    for (int p = 0; p <= c.q_ + 1; ++p) {
      dims.push_back(reps[p].size());
      if (p == 0) continue;
      ChainMap& m = ds[p];
      m.rows = reps[p - 1].size();
      m.cols = reps[p].size();
      std::map<Morphism, std::map<Morphism, long long>> by_rep;
      for (const auto& phi : reps[p]) {
        auto b = orbits.boundary(p, phi);
        m.columns.push_back(column_of(ops, b, idx[p - 1]));
        by_rep.emplace(phi, std::move(b));
      }
      // Equivariance: every member of a class has the signed boundary of its representative.
      if (v != ShiftVariant::Plain && p + d <= n) {
        for (const auto& phi : cat->hom(p + d, n)) {
          auto [rep, s] = orbits.canonical(p, phi);
          if (!s) continue;
          auto b = orbits.boundary(p, phi);
          auto expect = by_rep.at(rep);
          for (auto& [key, val] : expect) val *= s;
          if (b != expect) throw InvariantViolation("shift complex: differential is not constant on classes");
          ++c.equivariance_checks_;
        }
      }
    }
    c.dims_.push_back(std::move(dims));
    c.d_.push_back(std::move(ds));
  }
  c.verify_dd();
  return c;
}

ShiftComplex ShiftComplex::of_module(ModulePtr mod, ShiftVariant v, int q) {
  CategoryPtr cat = mod->category();
  if (!cat->complemented()) throw PreconditionError("no_complements", cat->name() + " does not provide complements");
  ShiftOrbits orbits(cat, 0, v);
  ShiftComplex c;
  c.variant_ = v;
  c.cat_name_ = cat->name();
  c.module_name_ = mod->name();
  c.field_ = mod->field();
  c.max_rank_ = mod->max_rank();
  c.q_ = q < 0 ? c.max_rank_ : q;
  KOps ops = mod->ops();
  for (int n = 0; n <= c.max_rank_; ++n) {
    struct Level {
      std::vector<Morphism> reps, comps;
      std::vector<std::uint32_t> offset;
      IndexMap idx;
      std::size_t dim = 0;
    };
    std::vector<Level> lv(c.q_ + 2);
    for (int p = 0; p <= c.q_ + 1 && p <= n; ++p) {
      Level& L = lv[p];
      L.reps = orbits.representatives(n, p);
      L.idx = index_map(L.reps);
      for (const auto& h : L.reps) {
        L.comps.push_back(cat->complement_of(h));
        L.offset.push_back(static_cast<std::uint32_t>(L.dim));
        L.dim += mod->dim(n - p);
      }
    }
    std::vector<std::size_t> dims;
    std::vector<ChainMap> ds(c.q_ + 2);
    for (int p = 0; p <= c.q_ + 1; ++p) {
      dims.push_back(lv[p].dim);
      if (p == 0) continue;
      ChainMap& m = ds[p];
      m.rows = lv[p - 1].dim;
      m.cols = lv[p].dim;
      for (std::size_t a = 0; a < lv[p].reps.size(); ++a) {
        const Morphism& h = lv[p].reps[a];
        std::vector<std::vector<std::pair<std::uint32_t, Rational>>> cols(mod->dim(n - p));
        for (int i = 0; i < p; ++i) {
          Morphism face = cat->compose(h, cat->factor_map(p, omit(p, i)));
          auto [rep, s] = orbits.canonical(p - 1, face);
          if (!s) continue;
          std::uint32_t b = lookup(lv[p - 1].idx, rep);
          auto psi = cat->factor_through(lv[p - 1].comps[b], lv[p].comps[a]);
          if (!psi) throw InvariantViolation("shift complex: complement of h does not lie in the complement of h∘s_i");
          Rational sign = ops.from_int(i % 2 ? -s : s);
          for (std::uint32_t j = 0; j < cols.size(); ++j)
            for (const auto& [r, x] : mod->act(*psi, CoefVec{{j, ops.one()}}))
              cols[j].emplace_back(lv[p - 1].offset[b] + r, ops.mul(sign, x));
        }
        for (auto& col : cols) m.columns.push_back(collect(ops, std::move(col)));
      }
    }
    c.dims_.push_back(std::move(dims));
    c.d_.push_back(std::move(ds));
  }
  c.verify_dd();
  return c;
}

void ShiftComplex::verify_dd() {
  KOps ops{field_};
  for (std::size_t n = 0; n < d_.size(); ++n) {
    for (int p = 2; p <= q_ + 1; ++p) {
      const auto& hi = d_[n][p];
      const auto& lo = d_[n][p - 1];
      for (const auto& col : hi.columns) {
        CoefVec acc;
        for (const auto& [i, x] : col) acc = axpy(ops, acc, x, lo.columns.at(i));
        if (!acc.empty())
          throw InvariantViolation("shift complex: d∘d != 0 at rank " + std::to_string(n) + ", degree " + std::to_string(p));
        ++dd_checks_;
      }
    }
    std::vector<std::size_t> r(q_ + 2, 0);
    for (int p = 1; p <= q_ + 1; ++p) r[p] = rank_in_field(field_, d_[n][p].columns);
    ranks_.push_back(std::move(r));
  }
}

std::size_t ShiftComplex::dim(int n, int p) const {
  if (p < 0 || p > q_ + 1) return 0;
  return dims_.at(n).at(p);
}

const ChainMap& ShiftComplex::differential(int n, int p) const {
  if (p < 1 || p > q_ + 1) throw PreconditionError("bad_degree", "differential degree out of range");
  return d_.at(n).at(p);
}

std::size_t ShiftComplex::rank_of_differential(int n, int p) const {
  if (p < 1 || p > q_ + 1) return 0;
  return ranks_.at(n).at(p);
}

std::vector<std::size_t> ShiftComplex::homology(int n) const {
  std::vector<std::size_t> h;
  for (int p = 0; p <= q_; ++p) h.push_back(dim(n, p) - rank_of_differential(n, p) - rank_of_differential(n, p + 1));
  return h;
}

nlohmann::json complex_homology(const ShiftComplex& c, int rank) {
  if (rank < 0 || rank > c.max_rank()) throw PreconditionError("bad_rank", "rank outside truncation");
  nlohmann::json dims = nlohmann::json::object();
  auto h = c.homology(rank);
  for (std::size_t i = 0; i < h.size(); ++i) dims["H" + std::to_string(i)] = h[i];
  return {{"cat", c.category_name()},
          {"module", c.module_name()},
          {"variant", to_string(c.variant())},
          {"rank", rank},
          {"dims", dims},
          {"truncation", c.max_rank()}};
}

nlohmann::json exactness_report(const ShiftComplex& c) {
  int N = c.max_rank();
  std::vector<std::vector<std::size_t>> table;
  for (int n = 0; n <= N; ++n) table.push_back(c.homology(n));
  nlohmann::json thresholds = nlohmann::json::object(), anomalies = nlohmann::json::array();
  for (int i = 0; i <= c.max_degree(); ++i) {
    nlohmann::json t = nullptr;
    for (int n0 = N; n0 >= 0 && table[n0][i] == 0; --n0) t = n0;
    thresholds["H" + std::to_string(i)] = t;
  }
  for (int n = 0; n <= N; ++n) {
    bool exact = std::all_of(table[n].begin(), table[n].end(), [](std::size_t x) { return x == 0; });
    if (!exact) continue;
    for (int m = n + 1; m <= N; ++m)
      for (int i = 0; i <= c.max_degree(); ++i)
        if (table[m][i]) anomalies.push_back({{"exact_at", n}, {"nonzero_at", m}, {"degree", i}});
  }
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : table) rows.push_back(r);
  return {{"cat", c.category_name()},
          {"module", c.module_name()},
          {"variant", to_string(c.variant())},
          {"homology", rows},
          {"thresholds", thresholds},
          {"anomalies", anomalies},
          {"truncation", N}};
}

// ---------------------------------------------------------------- homotopy

bool HomotopyReport::ok() const {
  return std::all_of(degrees.begin(), degrees.end(),
                     [](const HomotopyDegree& d) { return d.identity_holds && d.induced_zero; });
}

nlohmann::json HomotopyReport::to_json() const {
  nlohmann::json deg = nlohmann::json::array();
  for (const auto& d : degrees)
    deg.push_back({{"p", d.p},
                   {"basis", d.basis},
                   {"identity_holds", d.identity_holds},
                   {"cycles", d.cycles},
                   {"induced_zero", d.induced_zero},
                   {"mode", d.mode}});
  return {{"cat", cat}, {"module", module}, {"variant", variant}, {"rank", rank}, {"degrees", deg}, {"ok", ok()}};
}

HomotopyReport chain_homotopy_check(CategoryPtr cat, int d, ShiftVariant v, int n, CoefField k, std::size_t rank_limit) {
  if (!cat->symmetric()) throw PreconditionError("asymmetric", "the homotopy G needs a symmetric structure on " + cat->name());
  ShiftOrbits orb(cat, d, v);
  KOps ops{k};
  HomotopyReport rep;
  rep.cat = cat->name();
  rep.module = "P" + std::to_string(d);
  rep.variant = to_string(v);
  rep.rank = n;
  auto G = [&](int p, const Morphism& phi) { return orb.canonical(p + 1, orb.homotopy(p, phi)); };
  auto I = [&](int p, const Morphism& phi) { return orb.canonical(p, orb.stabilize(phi)); };
  for (int p = 0; p + d <= n; ++p) {
    HomotopyDegree hd;
    hd.p = p;
    auto reps = orb.representatives(n, p);
    hd.basis = reps.size();
    std::vector<std::map<Morphism, long long>> bnd;
    for (const auto& phi : reps) {
      std::map<Morphism, long long> lhs;
      auto [g, gs] = G(p, phi);
      if (gs)
        for (const auto& [m, c] : orb.boundary(p + 1, g)) add_term(lhs, m, c * gs);
      auto b = p ? orb.boundary(p, phi) : std::map<Morphism, long long>{};
      for (const auto& [psi, c] : b) {
        auto [g2, s2] = G(p - 1, psi);
        if (s2) add_term(lhs, g2, c * s2);
      }
      std::map<Morphism, long long> rhs;
      auto [ip, is] = I(p, phi);
      if (is) rhs.emplace(ip, is);
      if (lhs != rhs) hd.identity_holds = false;
      bnd.push_back(std::move(b));
    }
    // Cycles at rank n.
    std::vector<CoefVec> cycles;
    if (p == 0) {
      for (std::uint32_t j = 0; j < reps.size(); ++j) cycles.push_back({{j, ops.one()}});
    } else {
      auto lower = index_map(orb.representatives(n, p - 1));
      Echelon<KOps> e(ops, true);
      for (std::uint32_t j = 0; j < reps.size(); ++j) e.insert(column_of(ops, bnd[j], lower), j);
      cycles = e.kernel();
    }
    hd.cycles = cycles.size();
    // Witness: I(z) = d(G z) exactly.
    std::vector<std::map<Morphism, Rational>> images;
    for (const auto& z : cycles) {
      std::map<Morphism, Rational> y, diff;
      for (const auto& [j, c] : z) {
        auto [g, gs] = G(p, reps[j]);
        if (gs) add_term(y, g, ops.mul(c, ops.from_int(gs)));
        auto [ip, is] = I(p, reps[j]);
        if (is) add_term(diff, ip, ops.mul(c, ops.from_int(is)));
      }
      images.push_back(diff);
      for (const auto& [g, c] : y)
        for (const auto& [m, x] : orb.boundary(p + 1, g)) add_term(diff, m, ops.neg(ops.mul(c, ops.from_int(x))));
      for (auto it = diff.begin(); it != diff.end();) {
        it->second = ops.from_rational(it->second);
        it = it->second == 0 ? diff.erase(it) : std::next(it);
      }
      if (!diff.empty()) hd.induced_zero = false;
    }
    hd.mode = "witness";
    // Rank confirmation when rank n + 1 is small enough to enumerate.
    if (!cycles.empty() && cat->enumeration_bound(p + 1 + d, n + 1) <= rank_limit) {
      try {
        auto hi = orb.representatives(n + 1, p + 1);
        auto lo_idx = index_map(orb.representatives(n + 1, p));
        Echelon<KOps> B(ops);
        for (const auto& g : hi) B.insert(column_of(ops, orb.boundary(p + 1, g), lo_idx));
        for (const auto& im : images) {
          std::vector<std::pair<std::uint32_t, Rational>> t;
          for (const auto& [m, c] : im) t.emplace_back(lookup(lo_idx, m), ops.from_rational(c));
          if (!B.contains(collect(ops, std::move(t)))) hd.induced_zero = false;
        }
        hd.mode = "witness+rank";
      } catch (const BudgetExceeded&) {
      }
    }
    rep.degrees.push_back(std::move(hd));
  }
  return rep;
}

// ---------------------------------------------------------------- generation

nlohmann::json GenerationReport::to_json() const {
  nlohmann::json n0j = n0 ? nlohmann::json(*n0) : nlohmann::json(nullptr);
  return {{"truncation", truncation}, {"dims", dims}, {"rank_d1", ranks}, {"onto", onto}, {"n0", n0j}};
}

GenerationReport generation_degree(const TruncatedModule& mod) {
  const auto& cat = *mod.category();
  if (!cat.complemented()) throw PreconditionError("no_complements", cat.name() + " does not provide complements");
  auto ops = mod.ops();
  GenerationReport rep;
  rep.truncation = mod.max_rank();
  for (int n = 0; n <= mod.max_rank(); ++n) {
    std::vector<CoefVec> cols;
    if (n >= 1)
      for (const auto& h : cat.hom(1, n)) {
        Morphism c = cat.complement_of(h);
        for (std::uint32_t j = 0; j < mod.dim(n - 1); ++j) cols.push_back(mod.act(c, CoefVec{{j, ops.one()}}));
      }
    std::size_t r = rank_in_field(mod.field(), cols);
    rep.dims.push_back(mod.dim(n));
    rep.ranks.push_back(r);
    rep.onto.push_back(r == mod.dim(n));
  }
  for (int n0 = mod.max_rank(); n0 >= 0 && rep.onto[n0]; --n0) rep.n0 = n0;
  return rep;
}

}  // namespace ficat
