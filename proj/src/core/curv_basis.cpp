#include "core/curv_basis.hpp"

#include <algorithm>

#include "core/errors.hpp"

namespace hig {

bool is_legal(int n, const Label& label) {
  const int k = label.k;
  const int q = label.q;
  if (label.kind == BasisKind::Delta) {
    return k >= 0 && k <= 2 * n && q >= std::max(0, k - n) && 2 * q <= k;
  }
  return k >= 1 && k <= 2 * n - 3 && q >= std::max(0, k - n + 1) && 2 * q < k;
}

std::string label_name(const Label& label, bool dual) {
  std::string name = label.kind == BasisKind::Delta ? "Delta" : "N";
  if (dual) name += "Star";
  return name + "(" + std::to_string(label.k) + "," + std::to_string(label.q) + ")";
}

std::vector<Label> enumerate_basis(int n) {
  if (n < 1) throw DomainError("n must be at least 1");
  std::vector<Label> out;
  for (int k = 0; k <= 2 * n; ++k) {
    for (int q = 0; 2 * q <= k; ++q) {
      for (BasisKind kind : {BasisKind::Delta, BasisKind::N}) {
        const Label label{kind, k, q};
        if (is_legal(n, label)) out.push_back(label);
      }
    }
  }
  return out;
}

std::shared_ptr<const CurvBasis> CurvBasis::create(int n) {
  return std::shared_ptr<const CurvBasis>(new CurvBasis(n));
}

CurvBasis::CurvBasis(int n) : n_(n), labels_(enumerate_basis(n)) {
  by_degree_.resize(static_cast<std::size_t>(2 * n + 1));
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    index_.emplace(labels_[i], i);
    by_degree_[static_cast<std::size_t>(labels_[i].k)].push_back(i);
  }
}

std::optional<std::size_t> CurvBasis::find(const Label& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t CurvBasis::index(const Label& label) const {
  if (auto i = find(label)) return *i;
  throw RangeError("basis label " + label_name(label) + " is out of range for n = " +
                   std::to_string(n_));
}

std::span<const std::size_t> CurvBasis::indices_of_degree(int k) const {
  if (k < 0 || k > 2 * n_) return {};
  return by_degree_[static_cast<std::size_t>(k)];
}

template <class Tag>
BasisVector<Tag>::BasisVector(CurvBasisPtr basis, ScalarVector coeffs)
    : basis_(std::move(basis)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != basis_->size()) throw DomainError("coordinate vector has wrong length");
}

template <class Tag>
BasisVector<Tag> BasisVector<Tag>::degree_part(int k) const {
  BasisVector out(basis_);
  for (std::size_t i : basis_->indices_of_degree(k)) out.coeffs_[i] = coeffs_[i];
  return out;
}

template <class Tag>
void BasisVector<Tag>::check_same(const BasisVector& rhs) const {
  if (n() != rhs.n()) throw DomainError("elements from different n");
}

template <class Tag>
BasisVector<Tag>& BasisVector<Tag>::operator+=(const BasisVector& rhs) {
  check_same(rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (!rhs.coeffs_[i].is_zero()) coeffs_[i] += rhs.coeffs_[i];
  }
  return *this;
}

template <class Tag>
BasisVector<Tag>& BasisVector<Tag>::operator-=(const BasisVector& rhs) {
  check_same(rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (!rhs.coeffs_[i].is_zero()) coeffs_[i] -= rhs.coeffs_[i];
  }
  return *this;
}

template <class Tag>
BasisVector<Tag>& BasisVector<Tag>::operator*=(const Scalar& c) {
  for (auto& x : coeffs_) {
    if (!x.is_zero()) x *= c;
  }
  return *this;
}

template class BasisVector<CurvTag>;
template class BasisVector<DualTag>;

Scalar pairing(const DualElement& l, const CurvElement& phi) {
  if (l.n() != phi.n()) throw DomainError("pairing across different n");
  Scalar sum;
  for (std::size_t i = 0; i < l.coefficients().size(); ++i) {
    if (!l[i].is_zero() && !phi[i].is_zero()) sum += l[i] * phi[i];
  }
  return sum;
}

}  // namespace hig
