#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "dialectica/dialectica.hpp"

namespace dialectica {

namespace detail {

class Bits {
 public:
  Bits() = default;
  explicit Bits(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}
  void set(std::size_t i) { w_[i / 64] |= (std::uint64_t{1} << (i % 64)); }
  bool test(std::size_t i) const { return (w_[i / 64] >> (i % 64)) & 1U; }
  bool none() const {
    return std::all_of(w_.begin(), w_.end(), [](std::uint64_t w) { return w == 0; });
  }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : w_) c += static_cast<std::size_t>(__builtin_popcountll(w));
    return c;
  }
  std::size_t first() const {
    for (std::size_t i = 0; i < w_.size(); ++i) {
      if (w_[i]) return i * 64 + static_cast<std::size_t>(__builtin_ctzll(w_[i]));
    }
    return n_;
  }
  bool subset_of(const Bits& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i) {
      if (w_[i] & ~o.w_[i]) return false;
    }
    return true;
  }
  Bits& operator&=(const Bits& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  static Bits full(std::size_t n) {
    Bits b(n);
    for (std::size_t i = 0; i < n; ++i) b.set(i);
    return b;
  }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

}  // namespace detail

// Decides hom(G, H) in a dialectica model over a posetal base and returns a
// witness when one exists.  A morphism exists iff there is f : X -> U such
// that for every v some y satisfies G(x, y) <= H(f x, v) for all x.  Rows and
// columns dominated pointwise are removed first, then f is found by
// backtracking with forward checking.
template <PosetalBase B>
class HomSolver {
 public:
  using Object = DialObject<B>;

  HomSolver(const Dialectica<B>& model, Object G, Object H)
      : model_(model), G_(std::move(G)), H_(std::move(H)) {}

  std::optional<DialMorphism<B>> solve() {
    const std::size_t nx = G_.wit().size(), ny = G_.cowit().size();
    const std::size_t nu = H_.wit().size(), nv = H_.cowit().size();
    if (nx > 0 && nu == 0) return std::nullopt;
    if (nv > 0 && ny == 0) return std::nullopt;
    if (nx == 0 || nv == 0) return build(std::vector<std::size_t>(nx, 0), std::vector<std::size_t>(nv, 0));

    intern();
    reduce();
    const std::size_t kx = xs_.size(), ky = ys_.size(), ku = us_.size(), kv = vs_.size();
    check_budget("hom search table", saturating_mul(saturating_mul(kx, ku), kv), model_.limits());
    // sat_[x][u][v]: kept y with G(x, y) <= H(u, v).
    sat_.assign(kx, std::vector<std::vector<detail::Bits>>(ku, std::vector<detail::Bits>(kv)));
    for (std::size_t a = 0; a < kx; ++a) {
      for (std::size_t b = 0; b < ku; ++b) {
        for (std::size_t c = 0; c < kv; ++c) {
          detail::Bits bits(ky);
          const auto h = hid_[us_[b] * nv + vs_[c]];
          for (std::size_t d = 0; d < ky; ++d) {
            if (le_[gid_[xs_[a] * ny + ys_[d]]][h]) bits.set(d);
          }
          sat_[a][b][c] = std::move(bits);
        }
      }
    }
    assign_.assign(kx, SIZE_MAX);
    std::vector<detail::Bits> cur(kv, detail::Bits::full(ky));
    if (!search(cur, 0)) return std::nullopt;

    std::vector<std::size_t> fx(nx), gv(nv);
    for (std::size_t a = 0; a < kx; ++a) fx[xs_[a]] = us_[assign_[a]];
    for (std::size_t c = 0; c < kv; ++c) gv[vs_[c]] = ys_[final_[c].first()];
    for (std::size_t x = 0; x < nx; ++x) fx[x] = fx[chase(rep_x_, x)];
    for (std::size_t v = 0; v < nv; ++v) gv[v] = gv[chase(rep_v_, v)];
    return build(fx, gv);
  }

  // Sizes after dominance reduction: kept x, y, u, v.
  std::vector<std::size_t> reduced_shape() const {
    return {xs_.size(), ys_.size(), us_.size(), vs_.size()};
  }

 private:
  using Matrix = std::vector<std::uint32_t>;

  static std::size_t chase(const std::vector<std::size_t>& rep, std::size_t i) {
    while (rep[i] != i) i = rep[i];
    return i;
  }

  // Replaces base objects by indices into a shared list of distinct values.
  void intern() {
    auto id_of = [this](const typename B::Object& o) {
      for (std::size_t i = 0; i < values_.size(); ++i) {
        if (values_[i] == o) return static_cast<std::uint32_t>(i);
      }
      values_.push_back(o);
      return static_cast<std::uint32_t>(values_.size() - 1);
    };
    const std::size_t nx = G_.wit().size(), ny = G_.cowit().size();
    const std::size_t nu = H_.wit().size(), nv = H_.cowit().size();
    gid_.resize(nx * ny);
    gt_.resize(nx * ny);
    for (std::size_t x = 0; x < nx; ++x) {
      for (std::size_t y = 0; y < ny; ++y) gt_[y * nx + x] = gid_[x * ny + y] = id_of(G_.at(x, y));
    }
    hid_.resize(nu * nv);
    ht_.resize(nu * nv);
    for (std::size_t u = 0; u < nu; ++u) {
      for (std::size_t v = 0; v < nv; ++v) ht_[v * nu + u] = hid_[u * nv + v] = id_of(H_.at(u, v));
    }
    le_.assign(values_.size(), std::vector<bool>(values_.size()));
    for (std::size_t i = 0; i < values_.size(); ++i) {
      for (std::size_t j = 0; j < values_.size(); ++j) le_[i][j] = model_.base().leq(values_[i], values_[j]);
    }
  }

  // Drops rows of M (stride columns per row) that another kept row beats on
  // the kept columns; ties keep the earlier row.  With drop_smaller a row
  // loses to any pointwise greater row, otherwise to any pointwise smaller one.
  bool prune(const Matrix& M, std::size_t stride, std::vector<std::size_t>& rows,
             const std::vector<std::size_t>& cols, bool drop_smaller, std::vector<std::size_t>* rep) {
    const std::size_t n = rows.size(), k = values_.size();
    // eq[p*k + a]: columns where row p holds a; up[p*k + a]: columns where a <= row p.
    std::vector<detail::Bits> eq(n * k, detail::Bits(cols.size())), up(n * k, detail::Bits(cols.size()));
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t c = 0; c < cols.size(); ++c) {
        const auto e = M[rows[p] * stride + cols[c]];
        eq[p * k + e].set(c);
        for (std::size_t a = 0; a < k; ++a) {
          if (le_[a][e]) up[p * k + a].set(c);
        }
      }
    }
    auto below = [&](std::size_t p, std::size_t q) {
      for (std::size_t a = 0; a < k; ++a) {
        if (!eq[p * k + a].subset_of(up[q * k + a])) return false;
      }
      return true;
    };
    auto beats = [&](std::size_t q, std::size_t p) { return drop_smaller ? below(p, q) : below(q, p); };
    std::vector<bool> alive(n, true);
    bool changed = false;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = 0; q < n; ++q) {
        if (q == p || !alive[q]) continue;
        if (beats(q, p) && (q < p || !beats(p, q))) {
          alive[p] = false;
          if (rep) (*rep)[rows[p]] = rows[q];
          changed = true;
          break;
        }
      }
    }
    std::vector<std::size_t> kept;
    for (std::size_t p = 0; p < n; ++p) {
      if (alive[p]) kept.push_back(rows[p]);
    }
    rows = std::move(kept);
    return changed;
  }

  // Removes dominated rows and columns until nothing changes.
  void reduce() {
    auto all = [](std::size_t n) {
      std::vector<std::size_t> v(n);
      for (std::size_t i = 0; i < n; ++i) v[i] = i;
      return v;
    };
    const std::size_t nx = G_.wit().size(), ny = G_.cowit().size();
    const std::size_t nu = H_.wit().size(), nv = H_.cowit().size();
    xs_ = all(nx);
    ys_ = all(ny);
    us_ = all(nu);
    vs_ = all(nv);
    rep_x_ = xs_;
    rep_v_ = vs_;
    bool changed = true;
    while (changed) {
      changed = false;
      // x is covered by x' when G(x, .) <= G(x', .).
      changed |= prune(gid_, ny, xs_, ys_, true, &rep_x_);
      // y' is at least as good as y when G(., y') <= G(., y).
      changed |= prune(gt_, nx, ys_, xs_, false, nullptr);
      // u' is at least as good as u when H(u, .) <= H(u', .).
      changed |= prune(hid_, nv, us_, vs_, true, nullptr);
      // v' is at least as hard as v when H(., v') <= H(., v).
      changed |= prune(ht_, nu, vs_, us_, false, &rep_v_);
    }
  }
  bool viable(const std::vector<detail::Bits>& cur, std::size_t a, std::size_t b) const {
    for (std::size_t c = 0; c < cur.size(); ++c) {
      detail::Bits t = cur[c];
      t &= sat_[a][b][c];
      if (t.none()) return false;
    }
    return true;
  }

  bool search(const std::vector<detail::Bits>& cur, std::size_t depth) {
    const std::size_t kx = xs_.size();
    if (depth == kx) {
      final_ = cur;
      return true;
    }
    // Most constrained unassigned x first; fail if any has no option.
    std::size_t pick = SIZE_MAX, best = SIZE_MAX;
    std::vector<std::size_t> options;
    for (std::size_t a = 0; a < kx; ++a) {
      if (assign_[a] != SIZE_MAX) continue;
      std::size_t n = 0;
      for (std::size_t b = 0; b < us_.size(); ++b) n += viable(cur, a, b) ? 1 : 0;
      if (n == 0) return false;
      if (n < best) {
        best = n;
        pick = a;
      }
    }
    for (std::size_t b = 0; b < us_.size(); ++b) {
      if (!viable(cur, pick, b)) continue;
      std::vector<detail::Bits> next = cur;
      for (std::size_t c = 0; c < next.size(); ++c) next[c] &= sat_[pick][b][c];
      assign_[pick] = b;
      if (search(next, depth + 1)) return true;
      assign_[pick] = SIZE_MAX;
    }
    return false;
  }

  DialMorphism<B> build(const std::vector<std::size_t>& fx, const std::vector<std::size_t>& gv) const {
    const auto& X = G_.wit();
    const auto& Y = G_.cowit();
    const auto& U = H_.wit();
    const auto& V = H_.cowit();
    std::vector<Value> ft, gt;
    for (std::size_t x = 0; x < X.size(); ++x) ft.push_back(U[fx[x]]);
    for (std::size_t v = 0; v < V.size(); ++v) gt.push_back(Y[gv[v]]);
    return model_.from_maps(G_, H_, FiniteFunction(X, U, std::move(ft)),
                            FiniteFunction(V, Y, std::move(gt)));
  }

  const Dialectica<B>& model_;
  Object G_;
  Object H_;
  std::vector<typename B::Object> values_;
  std::vector<std::vector<bool>> le_;
  Matrix gid_, gt_, hid_, ht_;
  std::vector<std::size_t> xs_, ys_, us_, vs_;
  std::vector<std::size_t> rep_x_, rep_v_;
  std::vector<std::vector<std::vector<detail::Bits>>> sat_;
  std::vector<std::size_t> assign_;
  std::vector<detail::Bits> final_;
};

template <PosetalBase B>
std::optional<DialMorphism<B>> find_hom(const Dialectica<B>& model, const DialObject<B>& G,
                                        const DialObject<B>& H) {
  return HomSolver<B>(model, G, H).solve();
}

template <PosetalBase B>
bool hom_exists(const Dialectica<B>& model, const DialObject<B>& G, const DialObject<B>& H) {
  return find_hom(model, G, H).has_value();
}

// |hom(G, H)| over a posetal base: the sum over f of the product over v of
// the number of admissible y.
template <PosetalBase B>
std::uint64_t hom_count(const Dialectica<B>& model, const DialObject<B>& G, const DialObject<B>& H) {
  const auto& X = G.wit();
  const auto& Y = G.cowit();
  const auto& U = H.wit();
  const auto& V = H.cowit();
  check_budget("forward maps of hom-set", saturating_pow(U.size(), X.size()), model.limits());
  if (X.size() > 0 && U.size() == 0) return 0;
  // ok[x][u][v] bitset over y.
  std::vector<std::vector<std::vector<detail::Bits>>> ok(
      X.size(), std::vector<std::vector<detail::Bits>>(U.size(), std::vector<detail::Bits>(V.size())));
  for (std::size_t x = 0; x < X.size(); ++x) {
    for (std::size_t u = 0; u < U.size(); ++u) {
      for (std::size_t v = 0; v < V.size(); ++v) {
        detail::Bits b(Y.size());
        for (std::size_t y = 0; y < Y.size(); ++y) {
          if (model.base().leq(G.at(x, y), H.at(u, v))) b.set(y);
        }
        ok[x][u][v] = std::move(b);
      }
    }
  }
  std::uint64_t total = 0;
  std::vector<std::size_t> digit(X.size(), 0);
  while (true) {
    std::uint64_t prod = 1;
    for (std::size_t v = 0; v < V.size() && prod; ++v) {
      auto b = detail::Bits::full(Y.size());
      for (std::size_t x = 0; x < X.size(); ++x) b &= ok[x][digit[x]][v];
      prod = saturating_mul(prod, b.count());
    }
    total += prod;
    std::size_t k = X.size();
    bool carried = true;
    while (k > 0) {
      --k;
      if (++digit[k] < U.size()) {
        carried = false;
        break;
      }
      digit[k] = 0;
    }
    if (carried) break;
  }
  return total;
}

// Over a posetal base a morphism is invertible iff f and g are bijections
// and their inverses form a morphism; returns that inverse.
template <PosetalBase B>
std::optional<DialMorphism<B>> find_inverse(const Dialectica<B>& model, const DialMorphism<B>& m) {
  const auto& f = m.f();
  const auto& g = m.g();
  if (f.domain().size() != f.codomain().size() || g.domain().size() != g.codomain().size()) {
    return std::nullopt;
  }
  auto invert = [](const FiniteFunction& fn) -> std::optional<FiniteFunction> {
    std::vector<std::optional<Value>> back(fn.codomain().size());
    for (std::size_t i = 0; i < fn.domain().size(); ++i) {
      auto j = fn.codomain().index_of(fn.at(i));
      if (!j || back[*j]) return std::nullopt;
      back[*j] = fn.domain()[i];
    }
    std::vector<Value> table;
    for (auto& b : back) {
      if (!b) return std::nullopt;
      table.push_back(*b);
    }
    return FiniteFunction(fn.codomain(), fn.domain(), std::move(table));
  };
  auto fi = invert(f);
  auto gi = invert(g);
  if (!fi || !gi) return std::nullopt;
  try {
    return model.from_maps(m.dst(), m.src(), *fi, *gi);
  } catch (const ContractViolation&) {
    return std::nullopt;
  }
}

}  // namespace dialectica
