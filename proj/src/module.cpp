#include "ficat/module.hpp"

#include <algorithm>
#include <numeric>

#include "ficat/error.hpp"
#include "ficat/si.hpp"
#include "ficat/vic.hpp"
#include "ficat/wporder.hpp"

namespace ficat {

namespace {

// Fully reduced row echelon form of the given rows, sorted by pivot.
std::vector<CoefVec> rref(const KOps& ops, const std::vector<CoefVec>& rows) {
  Echelon<KOps> e(ops);
  for (const auto& r : rows) e.insert(r);
  std::vector<CoefVec> out = e.rows();
  std::sort(out.begin(), out.end(), [](const CoefVec& a, const CoefVec& b) { return a.front().first < b.front().first; });
  for (std::size_t i = out.size(); i-- > 0;) {
    for (std::size_t j = 0; j < i; ++j) {
      auto piv = out[i].front().first;
      auto it = std::lower_bound(out[j].begin(), out[j].end(), piv,
                                 [](const auto& entry, std::uint32_t v) { return entry.first < v; });
      if (it != out[j].end() && it->first == piv) out[j] = axpy(ops, out[j], ops.neg(it->second), out[i]);
    }
  }
  return out;
}

std::vector<CoefVec> basis_vectors(std::size_t dim, const KOps& ops) {
  std::vector<CoefVec> out;
  for (std::uint32_t i = 0; i < dim; ++i) out.push_back({{i, ops.one()}});
  return out;
}

}  // namespace

nlohmann::json TruncatedModule::basis_label(int, std::size_t i) const { return i; }

std::vector<std::size_t> TruncatedModule::dims() const {
  std::vector<std::size_t> out;
  for (int n = 0; n <= max_rank(); ++n) out.push_back(dim(n));
  return out;
}

// ---------------------------------------------------------------- representables

Representable::Representable(CategoryPtr cat, int d, int max_rank, CoefField k)
    : cat_(std::move(cat)), d_(d), max_rank_(max_rank), k_(k) {
  if (d < 0 || max_rank < 0) throw PreconditionError("bad_rank", "negative rank");
}

std::size_t Representable::dim(int n) const { return n < d_ ? 0 : basis(n).size(); }

CoefVec Representable::act(const Morphism& f, const CoefVec& x) const {
  if (x.empty() || f.src < d_) return {};
  const auto& src = basis(f.src);
  std::vector<std::pair<std::uint32_t, Rational>> terms;
  terms.reserve(x.size());
  for (const auto& [i, c] : x)
    terms.emplace_back(static_cast<std::uint32_t>(cat_->index_of(cat_->compose(f, src.at(i)))), c);
  return collect(ops(), std::move(terms));
}

nlohmann::json Representable::basis_label(int n, std::size_t i) const { return cat_->payload_json(basis(n).at(i)); }

CoefVec Representable::basis_vector(const Morphism& phi) const {
  return {{static_cast<std::uint32_t>(cat_->index_of(phi)), Rational(1)}};
}

RepresentablePtr representable(CategoryPtr cat, int d, int max_rank, CoefField k) {
  auto m = std::make_shared<const Representable>(std::move(cat), d, max_rank, k);
  for (int n = d; n <= max_rank; ++n) m->basis(n);  // budget errors surface here
  return m;
}

// ---------------------------------------------------------------- submodules

Submodule::Submodule(RepresentablePtr parent, std::vector<std::vector<CoefVec>> spans)
    : parent_(std::move(parent)), spans_(std::move(spans)) {
  spans_.resize(parent_->max_rank() + 1);
  for (auto& s : spans_) {
    s = rref(ops(), s);
    std::vector<std::uint32_t> piv;
    for (const auto& r : s) piv.push_back(r.front().first);
    pivots_.push_back(std::move(piv));
  }
}

bool Submodule::contains(int n, const CoefVec& v) const {
  auto ops_ = ops();
  CoefVec r = v;
  for (const auto& [i, c] : coords(n, v, true)) r = axpy(ops_, r, ops_.neg(c), spans_[n][i]);
  return r.empty();
}

CoefVec Submodule::coords(int n, const CoefVec& v) const {
  if (!contains(n, v)) throw PreconditionError("not_in_submodule", "vector outside the submodule span");
  return coords(n, v, true);
}

CoefVec Submodule::coords(int n, const CoefVec& v, bool) const {
  CoefVec out;
  const auto& piv = pivots_.at(n);
  for (const auto& [i, c] : v) {
    auto it = std::lower_bound(piv.begin(), piv.end(), i);
    if (it != piv.end() && *it == i) out.emplace_back(static_cast<std::uint32_t>(it - piv.begin()), c);
  }
  return out;
}

CoefVec Submodule::lift(int n, const CoefVec& c) const {
  auto ops_ = ops();
  CoefVec out;
  for (const auto& [i, x] : c) out = axpy(ops_, out, x, spans_.at(n).at(i));
  return out;
}

CoefVec Submodule::act(const Morphism& f, const CoefVec& x) const {
  return coords(f.dst, parent_->act(f, lift(f.src, x)));
}

SubmodulePtr submodule_closure(RepresentablePtr parent, const std::vector<Generator>& gens) {
  const auto& cat = *parent->category();
  int N = parent->max_rank();
  auto ops = parent->ops();
  for (const auto& g : gens) {
    if (g.rank < 0 || g.rank > N) throw PreconditionError("bad_rank", "generator rank outside truncation");
    for (const auto& [i, c] : g.vec)
      if (i >= parent->dim(g.rank)) throw PreconditionError("bad_generator", "generator index out of range");
  }
  std::vector<std::vector<CoefVec>> spans(N + 1);
  for (int n = 0; n <= N; ++n) {
    Echelon<KOps> e(ops);
    std::vector<CoefVec> seeds;
    auto add = [&](CoefVec v) {
      v = collect(ops, std::vector<std::pair<std::uint32_t, Rational>>(v.begin(), v.end()));
      if (e.insert(v)) seeds.push_back(std::move(v));
    };
    for (const auto& g : gens)
      if (g.rank == n) add(g.vec);
    if (cat.complemented()) {
      if (n > 0) {
        Morphism c = cat.canonical(n - 1, n);
        for (const auto& r : spans[n - 1]) add(parent->act(c, r));
      }
      // G·S spans a G-stable space, so one pass over the group suffices.
      std::vector<CoefVec> s = seeds;
      for (const auto& a : cat.aut(n))
        for (const auto& v : s) add(parent->act(a, v));
    } else {
      for (int m = 0; m < n; ++m)
        for (const auto& f : cat.hom(m, n))
          for (const auto& r : spans[m]) add(parent->act(f, r));
    }
    spans[n] = e.rows();
  }
  return std::make_shared<const Submodule>(std::move(parent), std::move(spans));
}

bool closure_fixed_point(const Submodule& s) {
  const auto& cat = *s.category();
  const auto& p = *s.parent();
  for (int n = 0; n <= s.max_rank(); ++n)
    for (int m = 0; m <= n; ++m)
      for (const auto& f : cat.hom(m, n))
        for (const auto& r : s.span(m))
          if (!s.contains(n, p.act(f, r))) return false;
  return true;
}

std::size_t check_functoriality(const TruncatedModule& mod, std::size_t limit) {
  const auto& cat = *mod.category();
  auto ops = mod.ops();
  int N = mod.max_rank();
  std::size_t checks = 0;
  for (int m = 0; m <= N; ++m) {
    auto xs = basis_vectors(mod.dim(m), ops);
    for (const auto& x : xs) {
      if (mod.act(cat.identity(m), x) != x) throw InvariantViolation(mod.name() + ": identity acts nontrivially");
      ++checks;
    }
    for (int k = m; k <= N; ++k)
      for (int n = k; n <= N; ++n)
        for (const auto& f : cat.hom(m, k))
          for (const auto& g : cat.hom(k, n)) {
            Morphism gf = cat.compose(g, f);
            for (const auto& x : xs) {
              if (checks >= limit) return checks;
              if (mod.act(gf, x) != mod.act(g, mod.act(f, x)))
                throw InvariantViolation(mod.name() + ": action does not respect composition");
              ++checks;
            }
          }
  }
  return checks;
}

// ---------------------------------------------------------------- initial terms

std::function<std::strong_ordering(const Morphism&, const Morphism&)> module_order(const Category& cat) {
  if (auto v = dynamic_cast<const VicCategory*>(&cat); v && v->ordered())
    return [v](const Morphism& a, const Morphism& b) { return ovic_total_cmp(*v, a, b); };
  if (auto s = dynamic_cast<const SiCategory*>(&cat); s && s->ordered())
    return [s](const Morphism& a, const Morphism& b) { return osi_total_cmp(s->mat_of(a), s->mat_of(b)); };
  throw PreconditionError("unsupported_category", "initial terms need OVIC or OSI, got " + cat.name());
}

CoefVec init_of(const Representable& parent, int n, const CoefVec& x) {
  auto cmp = module_order(*parent.category());
  if (x.empty()) return {};
  const auto& basis = parent.basis(n);
  auto best = x.begin();
  for (auto it = x.begin() + 1; it != x.end(); ++it)
    if (cmp(basis[it->first], basis[best->first]) > 0) best = it;
  return {*best};
}

std::vector<std::vector<std::uint32_t>> init_module(const Submodule& s) {
  const auto& parent = *s.parent();
  auto cmp = module_order(*parent.category());
  auto ops = s.ops();
  std::vector<std::vector<std::uint32_t>> out;
  for (int n = 0; n <= s.max_rank(); ++n) {
    const auto& basis = parent.basis(n);
    // Position 0 holds the largest basis morphism, so echelon pivots are initial terms.
    std::vector<std::uint32_t> order(parent.dim(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::uint32_t a, std::uint32_t b) { return cmp(basis[a], basis[b]) > 0; });
    std::vector<std::uint32_t> pos(order.size());
    for (std::uint32_t i = 0; i < order.size(); ++i) pos[order[i]] = i;
    Echelon<KOps> e(ops);
    for (const auto& row : s.span(n)) {
      std::vector<std::pair<std::uint32_t, Rational>> t;
      for (const auto& [i, c] : row) t.emplace_back(pos[i], c);
      e.insert(collect(ops, std::move(t)));
    }
    std::vector<std::uint32_t> lead;
    for (auto p : e.pivots()) lead.push_back(order[p]);
    std::sort(lead.begin(), lead.end());
    out.push_back(std::move(lead));
  }
  return out;
}

nlohmann::json InitGapReport::to_json() const {
  return {{"truncation", truncation},
          {"dims_n", dims_n},
          {"dims_m", dims_m},
          {"init_dims_n", init_dims_n},
          {"init_dims_m", init_dims_m},
          {"init_equal", init_equal},
          {"module_equal", module_equal},
          {"implication_holds", implication_holds},
          {"strict_init_somewhere", strict_init_somewhere}};
}

InitGapReport init_gap_check(const Submodule& n, const Submodule& m) {
  if (n.parent() != m.parent()) throw PreconditionError("parent_mismatch", "submodules of different parents");
  InitGapReport rep;
  rep.truncation = m.max_rank();
  for (int r = 0; r <= m.max_rank(); ++r)
    for (const auto& v : n.span(r))
      if (!m.contains(r, v)) throw PreconditionError("containment", "N is not contained in M at rank " + std::to_string(r));
  auto in = init_module(n), im = init_module(m);
  bool all_init_equal = true, all_equal = true;
  for (int r = 0; r <= m.max_rank(); ++r) {
    rep.dims_n.push_back(n.dim(r));
    rep.dims_m.push_back(m.dim(r));
    rep.init_dims_n.push_back(in[r].size());
    rep.init_dims_m.push_back(im[r].size());
    bool ie = in[r] == im[r];
    bool me = n.dim(r) == m.dim(r);
    rep.init_equal.push_back(ie);
    rep.module_equal.push_back(me);
    if (ie && !me) rep.implication_holds = false;
    if (!ie) rep.strict_init_somewhere = true;
    all_init_equal = all_init_equal && ie;
    all_equal = all_equal && me;
  }
  if (all_init_equal && !all_equal) rep.implication_holds = false;
  return rep;
}

}  // namespace ficat
