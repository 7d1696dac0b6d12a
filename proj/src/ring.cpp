#include "ficat/ring.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <tuple>

#include "ficat/error.hpp"

namespace ficat {

namespace {

// Inverse of a mod n via extended Euclid, or -1.
int inverse_mod(int a, int n) {
  long long t = 0, new_t = 1;
  long long r = n, new_r = a % n;
  while (new_r != 0) {
    long long q = r / new_r;
    std::tie(t, new_t) = std::make_tuple(new_t, t - q * new_t);
    std::tie(r, new_r) = std::make_tuple(new_r, r - q * new_r);
  }
  if (r != 1) return -1;
  if (t < 0) t += n;
  return static_cast<int>(t);
}

std::vector<int> parse_spec(std::string_view spec) {
  std::vector<int> moduli;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < spec.size() && std::isspace(static_cast<unsigned char>(spec[i]))) ++i;
  };
  auto fail = [&](const std::string& why) -> PreconditionError {
    return PreconditionError("bad_ring", "ring spec '" + std::string(spec) + "': " + why);
  };
  while (true) {
    skip_ws();
    if (i + 1 >= spec.size() || spec[i] != 'Z' || spec[i + 1] != '/') throw fail("expected Z/n");
    i += 2;
    if (i >= spec.size() || !std::isdigit(static_cast<unsigned char>(spec[i]))) throw fail("expected a modulus");
    long long n = 0;
    while (i < spec.size() && std::isdigit(static_cast<unsigned char>(spec[i]))) {
      n = n * 10 + (spec[i] - '0');
      if (n > 1'000'000) throw fail("modulus too large");
      ++i;
    }
    if (n < 2) throw fail("modulus below 2");
    moduli.push_back(static_cast<int>(n));
    skip_ws();
    if (i == spec.size()) break;
    if (spec[i] != 'x' && spec[i] != 'X') throw fail("expected 'x' between factors");
    ++i;
  }
  return moduli;
}

}  // namespace

RingPtr FiniteRing::make(std::string_view spec, std::size_t size_bound) {
  auto moduli = parse_spec(spec);
  std::size_t size = 1;
  for (int n : moduli) {
    size *= static_cast<std::size_t>(n);
    if (size > size_bound || size >= kNoInverse)
      throw PreconditionError("bad_ring", "ring spec '" + std::string(spec) + "': size exceeds bound " +
                                              std::to_string(size_bound));
  }
  return std::make_shared<const FiniteRing>(std::move(moduli));
}

FiniteRing::FiniteRing(std::vector<int> moduli) : moduli_(std::move(moduli)) {
  radix_.assign(moduli_.size(), 1);
  size_ = 1;
  for (std::size_t c = moduli_.size(); c-- > 0;) {
    radix_[c] = static_cast<int>(size_);
    size_ *= static_cast<std::size_t>(moduli_[c]);
  }
  for (std::size_t c = 0; c < moduli_.size(); ++c) {
    if (c) spec_ += " x ";
    spec_ += "Z/" + std::to_string(moduli_[c]);
  }
  one_ = 0;
  for (int w : radix_) one_ = static_cast<Elem>(one_ + w);

  if (size_ <= kTableBound) {
    add_table_.resize(size_ * size_);
    mul_table_.resize(size_ * size_);
    for (std::size_t a = 0; a < size_; ++a)
      for (std::size_t b = 0; b < size_; ++b) {
        add_table_[a * size_ + b] = add_slow(static_cast<Elem>(a), static_cast<Elem>(b));
        mul_table_[a * size_ + b] = mul_slow(static_cast<Elem>(a), static_cast<Elem>(b));
      }
  }

  inverse_.assign(size_, kNoInverse);
  for (std::size_t x = 0; x < size_; ++x) {
    auto comp = components(static_cast<Elem>(x));
    std::vector<long long> inv(comp.size());
    bool unit = true;
    for (std::size_t c = 0; c < comp.size() && unit; ++c) {
      int v = inverse_mod(comp[c], moduli_[c]);
      if (v < 0) unit = false;
      inv[c] = v;
    }
    if (unit) inverse_[x] = from_components(inv);
  }

  // Local iff a single cyclic factor of prime-power order.
  local_ = false;
  if (moduli_.size() == 1) {
    int n = moduli_[0], p = 2;
    while (n % p) ++p;
    while (n % p == 0) n /= p;
    local_ = (n == 1);
  }
}

Elem FiniteRing::add_slow(Elem a, Elem b) const {
  int out = 0;
  for (std::size_t c = 0; c < moduli_.size(); ++c) {
    int x = (a / radix_[c]) % moduli_[c];
    int y = (b / radix_[c]) % moduli_[c];
    out += ((x + y) % moduli_[c]) * radix_[c];
  }
  return static_cast<Elem>(out);
}

Elem FiniteRing::mul_slow(Elem a, Elem b) const {
  int out = 0;
  for (std::size_t c = 0; c < moduli_.size(); ++c) {
    long long x = (a / radix_[c]) % moduli_[c];
    long long y = (b / radix_[c]) % moduli_[c];
    out += static_cast<int>((x * y) % moduli_[c]) * radix_[c];
  }
  return static_cast<Elem>(out);
}

Elem FiniteRing::add(Elem a, Elem b) const {
  if (!add_table_.empty()) return add_table_[a * size_ + b];
  if (moduli_.size() == 1) return static_cast<Elem>((a + b) % moduli_[0]);
  return add_slow(a, b);
}

Elem FiniteRing::mul(Elem a, Elem b) const {
  if (!mul_table_.empty()) return mul_table_[a * size_ + b];
  if (moduli_.size() == 1)
    return static_cast<Elem>((static_cast<long long>(a) * b) % moduli_[0]);
  return mul_slow(a, b);
}

Elem FiniteRing::neg(Elem a) const {
  int out = 0;
  for (std::size_t c = 0; c < moduli_.size(); ++c) {
    int x = (a / radix_[c]) % moduli_[c];
    out += ((moduli_[c] - x) % moduli_[c]) * radix_[c];
  }
  return static_cast<Elem>(out);
}

Elem FiniteRing::sub(Elem a, Elem b) const { return add(a, neg(b)); }

std::optional<Elem> FiniteRing::inverse(Elem x) const {
  if (inverse_[x] == kNoInverse) return std::nullopt;
  return inverse_[x];
}

Elem FiniteRing::from_int(long long v) const {
  std::vector<long long> res(moduli_.size(), v);
  return from_components(res);
}

Elem FiniteRing::from_components(std::span<const long long> residues) const {
  if (residues.size() != moduli_.size())
    throw PreconditionError("bad_element", "expected " + std::to_string(moduli_.size()) + " residues for " + spec_);
  int out = 0;
  for (std::size_t c = 0; c < moduli_.size(); ++c) {
    long long r = residues[c] % moduli_[c];
    if (r < 0) r += moduli_[c];
    out += static_cast<int>(r) * radix_[c];
  }
  return static_cast<Elem>(out);
}

std::vector<int> FiniteRing::components(Elem x) const {
  std::vector<int> out(moduli_.size());
  for (std::size_t c = 0; c < moduli_.size(); ++c) out[c] = (x / radix_[c]) % moduli_[c];
  return out;
}

void FiniteRing::check_elem(Elem x) const {
  if (x >= size_)
    throw PreconditionError("bad_element", "element index " + std::to_string(x) + " outside " + spec_);
}

const LocalDecomposition& FiniteRing::local_factors() const {
  std::call_once(decomposition_once_, [this] {
    auto d = std::make_shared<LocalDecomposition>();
    const auto n = static_cast<Elem>(size_);
    if (local_) {
      d->factors.push_back(std::make_shared<const FiniteRing>(moduli_));
      d->idempotents.push_back(one_);
      std::vector<Elem> ident(size_);
      std::iota(ident.begin(), ident.end(), Elem{0});
      d->projection.push_back(ident);
      d->embedding.push_back(ident);
      d->lift_table = ident;
      decomposition_ = d;
      return;
    }
    // Primitive idempotents: nonzero e = e^2 that cannot be split as a sum of
    // two nonzero orthogonal idempotents.
    std::vector<Elem> idem;
    for (Elem x = 1; x < n; ++x)
      if (mul(x, x) == x) idem.push_back(x);
    std::vector<Elem> primitive;
    for (Elem e : idem) {
      bool split = false;
      for (Elem f : idem)
        if (f != e && mul(e, f) == f) { split = true; break; }
      if (!split) primitive.push_back(e);
    }
    struct Part {
      RingPtr ring;
      Elem e;
      std::vector<Elem> proj, emb;
    };
    std::vector<Part> parts;
    for (Elem e : primitive) {
      // R e is cyclic, generated additively by e.
      std::vector<Elem> multiples{0};
      Elem cur = e;
      while (cur != 0) {
        multiples.push_back(cur);
        cur = add(cur, e);
      }
      int order = static_cast<int>(multiples.size());
      Part p;
      p.ring = std::make_shared<const FiniteRing>(std::vector<int>{order});
      p.e = e;
      p.emb = multiples;
      std::vector<int> index_of(size_, -1);
      for (int m = 0; m < order; ++m) index_of[multiples[m]] = m;
      p.proj.resize(size_);
      for (Elem x = 0; x < n; ++x) {
        int m = index_of[mul(x, e)];
        if (m < 0) throw InvariantViolation("R e is not cyclic in " + spec_);
        p.proj[x] = static_cast<Elem>(m);
      }
      parts.push_back(std::move(p));
    }
    std::sort(parts.begin(), parts.end(), [](const Part& a, const Part& b) {
      return std::make_tuple(a.ring->size(), a.ring->spec(), a.e) <
             std::make_tuple(b.ring->size(), b.ring->spec(), b.e);
    });
    for (auto& p : parts) {
      d->factors.push_back(p.ring);
      d->idempotents.push_back(p.e);
      d->projection.push_back(std::move(p.proj));
      d->embedding.push_back(std::move(p.emb));
    }
    d->lift_table.assign(size_, 0);
    for (Elem x = 0; x < n; ++x) {
      std::size_t idx = 0;
      Elem back = 0;
      for (std::size_t i = 0; i < d->factors.size(); ++i) {
        idx = idx * d->factors[i]->size() + d->projection[i][x];
        back = add(back, d->embedding[i][d->projection[i][x]]);
      }
      if (back != x) throw InvariantViolation("idempotent decomposition of " + spec_ + " is incomplete");
      d->lift_table[idx] = x;
    }
    decomposition_ = d;
  });
  return *decomposition_;
}

std::vector<Elem> LocalDecomposition::project(Elem x) const {
  std::vector<Elem> out(factors.size());
  for (std::size_t i = 0; i < factors.size(); ++i) out[i] = projection[i][x];
  return out;
}

Elem LocalDecomposition::lift(std::span<const Elem> parts) const {
  if (parts.size() != factors.size()) throw PreconditionError("bad_element", "wrong number of factor components");
  std::size_t idx = 0;
  for (std::size_t i = 0; i < factors.size(); ++i) idx = idx * factors[i]->size() + parts[i];
  return lift_table[idx];
}

}  // namespace ficat
