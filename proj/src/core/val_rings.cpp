#include "core/val_rings.hpp"

#include <algorithm>
#include <numeric>

#include "core/errors.hpp"

namespace hig {

namespace {

constexpr std::size_t index_of(Quotient q) { return q == Quotient::Val ? 0 : 1; }

}  // namespace

std::shared_ptr<const RingContext> RingContext::create(int n) {
  if (n < 1) throw DomainError("n must be at least 1");
  return std::shared_ptr<const RingContext>(new RingContext(n));
}

std::vector<Monomial> RingContext::monomials_of_degree(int k) {
  std::vector<Monomial> out;
  for (int b = 0; 2 * b <= k; ++b) out.push_back({k - 2 * b, b, 0});
  return out;
}

RingContext::Slice RingContext::build_slice(int k, std::span<const WeightedPoly> generators) {
  Slice slice;
  slice.monomials = monomials_of_degree(k);
  const std::size_t width = slice.monomials.size();

  std::vector<ScalarVector> rows;
  for (const auto& g : generators) {
    const int g_deg = g.max_weight();
    if (g_deg < 0 || g_deg > k) continue;
    for (const Monomial& m : monomials_of_degree(k - g_deg)) {
      const WeightedPoly multiple = WeightedPoly::monomial(m) * g;
      ScalarVector row(width);
      for (const auto& [mono, c] : multiple.terms()) row[static_cast<std::size_t>(mono.s)] = c;
      rows.push_back(std::move(row));
    }
  }

  Matrix ideal(rows.size(), width);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < width; ++c) ideal(r, c) = rows[r][c];
  }
  std::vector<std::size_t> order(width);
  std::iota(order.rbegin(), order.rend(), std::size_t{0});  // highest s first
  const RowEchelon ech = row_reduce(std::move(ideal), order);

  std::vector<long> pivot_row(width, -1);
  for (std::size_t i = 0; i < ech.rank(); ++i) {
    pivot_row[ech.pivot_columns[i]] = static_cast<long>(i);
  }
  std::vector<std::size_t> basis_cols;
  for (std::size_t c = 0; c < width; ++c) {
    if (pivot_row[c] < 0) basis_cols.push_back(c);
  }
  for (std::size_t c : basis_cols) slice.basis.push_back(slice.monomials[c]);

  slice.reduction.resize(width, ScalarVector(basis_cols.size()));
  for (std::size_t c = 0; c < width; ++c) {
    if (pivot_row[c] < 0) {
      const auto pos = std::find(basis_cols.begin(), basis_cols.end(), c) - basis_cols.begin();
      slice.reduction[c][static_cast<std::size_t>(pos)] = Scalar(1);
      continue;
    }
    const auto r = static_cast<std::size_t>(pivot_row[c]);
    for (std::size_t j = 0; j < basis_cols.size(); ++j) {
      slice.reduction[c][j] = -ech.reduced(r, basis_cols[j]);
    }
  }
  return slice;
}

RingContext::RingContext(int n) : n_(n) {
  const int max_degree = 2 * n + 2;
  const std::array<WeightedPoly, 2> val_gens{fu_polynomial(n + 1), fu_polynomial(n + 2)};
  const std::array<WeightedPoly, 2> tilde_gens{wannerer_polynomial(n - 1),
                                               wannerer_polynomial(n)};
  for (int k = 0; k <= max_degree; ++k) {
    slices_[0].push_back(build_slice(k, val_gens));
    slices_[1].push_back(build_slice(k, tilde_gens));
  }
  // Once two consecutive slices vanish, every higher degree does too (each
  // monomial of larger weight is t or s times one of them).
  for (const auto& ring : slices_) {
    if (!ring[2 * n + 1].basis.empty() || !ring[2 * n + 2].basis.empty()) {
      throw InconsistencyError("quotient ring does not vanish above degree 2n");
    }
  }

  const auto top = static_cast<std::size_t>(2 * n);
  gram_.resize(top + 1);
  for (std::size_t k = 0; k <= top; ++k) {
    const auto& rows = slices_[0][k].basis;
    const auto& cols = slices_[0][top - k].basis;
    Matrix g(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (std::size_t j = 0; j < cols.size(); ++j) {
        g(i, j) = pd_pair(WeightedPoly::monomial(rows[i]), WeightedPoly::monomial(cols[j]));
      }
    }
    gram_[k] = std::move(g);
  }
}

const RingContext::Slice* RingContext::slice(Quotient q, int k) const {
  const auto& ring = slices_[index_of(q)];
  if (k < 0 || static_cast<std::size_t>(k) >= ring.size()) return nullptr;
  return &ring[static_cast<std::size_t>(k)];
}

int RingContext::top_degree(Quotient q) const {
  const auto& ring = slices_[index_of(q)];
  for (int k = static_cast<int>(ring.size()) - 1; k >= 0; --k) {
    if (!ring[static_cast<std::size_t>(k)].basis.empty()) return k;
  }
  return -1;
}

std::span<const Monomial> RingContext::normal_basis(Quotient q, int k) const {
  const Slice* s = slice(q, k);
  if (s == nullptr) return {};
  return s->basis;
}

std::vector<std::size_t> RingContext::dimensions(Quotient q) const {
  std::vector<std::size_t> out;
  for (int k = 0; k <= top_degree(q); ++k) out.push_back(dimension(q, k));
  return out;
}

std::size_t RingContext::total_dimension(Quotient q) const {
  const auto dims = dimensions(q);
  return std::accumulate(dims.begin(), dims.end(), std::size_t{0});
}

std::vector<Monomial> RingContext::all_normal_monomials(Quotient q) const {
  std::vector<Monomial> out;
  for (int k = 0; k <= top_degree(q); ++k) {
    const auto basis = normal_basis(q, k);
    out.insert(out.end(), basis.begin(), basis.end());
  }
  return out;
}

ScalarVector RingContext::coordinates(Quotient q, const WeightedPoly& p, int k) const {
  const Slice* s = slice(q, k);
  if (s == nullptr) return {};
  ScalarVector out(s->basis.size());
  for (const auto& [m, c] : p.terms()) {
    if (m.weight() != k) continue;
    if (m.v != 0) throw DomainError("quotient rings do not contain v");
    const auto& red = s->reduction[static_cast<std::size_t>(m.s)];
    for (std::size_t j = 0; j < out.size(); ++j) {
      if (!red[j].is_zero()) out[j] += c * red[j];
    }
  }
  return out;
}

WeightedPoly RingContext::from_coordinates(Quotient q, int k,
                                           std::span<const Scalar> coords) const {
  const auto basis = normal_basis(q, k);
  if (coords.size() != basis.size()) throw DomainError("coordinate vector has wrong length");
  WeightedPoly out;
  for (std::size_t j = 0; j < basis.size(); ++j) out.add_term(basis[j], coords[j]);
  return out;
}

WeightedPoly RingContext::normal_form(Quotient q, const WeightedPoly& p) const {
  if (p.has_v()) throw DomainError("quotient rings do not contain v");
  WeightedPoly out;
  const int top = std::min(p.max_weight(), top_degree(q));
  for (int k = std::max(0, p.min_weight()); k <= top; ++k) {
    out += from_coordinates(q, k, coordinates(q, p, k));
  }
  return out;
}

Scalar RingContext::top_evaluation(const WeightedPoly& p) const {
  const int top = 2 * n_;
  Scalar total;
  for (const auto& [m, c] : p.terms()) {
    if (m.weight() != top) continue;
    if (m.v != 0) throw DomainError("top_evaluation: polynomial contains v");
    total += c * Scalar(binomial(2 * n_ - 2 * m.s, n_ - m.s));
  }
  return total / ball_volume(top);
}

Scalar RingContext::pd_pair(const WeightedPoly& a, const WeightedPoly& b) const {
  const int top = 2 * n_;
  WeightedPoly product;
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      if (ma.weight() + mb.weight() == top) product.add_term(ma * mb, ca * cb);
    }
  }
  return top_evaluation(product);
}

const Matrix& RingContext::gram(int k) const {
  if (k < 0 || k > 2 * n_) throw DomainError("gram: degree out of range");
  return gram_[static_cast<std::size_t>(k)];
}

template <Quotient Q>
void RingElement<Q>::check_same(const RingElement& a, const RingElement& b) {
  if (a.ctx_->n() != b.ctx_->n()) throw DomainError("ring elements from different n");
}

template class RingElement<Quotient::Val>;
template class RingElement<Quotient::Tilde>;

ValElement reduce_val(const WeightedPoly& p, const RingContextPtr& ctx) { return {ctx, p}; }

TildeValElement reduce_tilde(const WeightedPoly& p, const RingContextPtr& ctx) {
  return {ctx, p};
}

Scalar pd_pair(const ValElement& a, const ValElement& b) {
  if (a.context()->n() != b.context()->n()) throw DomainError("pd_pair across different n");
  return a.context()->pd_pair(a.poly(), b.poly());
}

}  // namespace hig
