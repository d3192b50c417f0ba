#include "fqw/chars.hpp"

#include <algorithm>
#include <set>

namespace fqw {

namespace {

void require_matching(const FqField& f, const CycloRing& r) {
  if (r.conductor() != character_conductor(f))
    throw std::invalid_argument("character: ring conductor must be p(q-1)");
}

}  // namespace

AddCharacter::AddCharacter(FqFieldPtr field, CycloRingPtr ring)
    : field_(std::move(field)), ring_(std::move(ring)) {
  require_matching(*field_, *ring_);
}

MultCharacter::MultCharacter(FqFieldPtr field, CycloRingPtr ring, i64 index)
    : field_(std::move(field)), ring_(std::move(ring)), index_(index) {
  require_matching(*field_, *ring_);
  if (index_ < 0 || index_ >= field_->q() - 1)
    throw std::invalid_argument("MultCharacter: index must lie in [0, q-2]");
}

PrincipalSeriesParam PrincipalSeriesParam::make(FqFieldPtr field, CycloRingPtr ring,
                                                const std::vector<i64>& chi_indices) {
  if (chi_indices.empty()) throw std::invalid_argument("PrincipalSeriesParam: empty tuple");
  std::vector<MultCharacter> chi;
  chi.reserve(chi_indices.size());
  for (i64 j : chi_indices) chi.emplace_back(field, ring, j);
  std::set<i64> uniq(chi_indices.begin(), chi_indices.end());
  const bool distinct = uniq.size() == chi_indices.size();
  return PrincipalSeriesParam(std::move(chi), AddCharacter(std::move(field), std::move(ring)),
                              distinct);
}

std::vector<i64> PrincipalSeriesParam::chi_indices() const {
  std::vector<i64> out;
  out.reserve(chi_.size());
  for (const auto& c : chi_) out.push_back(c.index());
  return out;
}

PrincipalSeriesParam PrincipalSeriesParam::truncated() const {
  if (n() < 2) throw std::invalid_argument("PrincipalSeriesParam: cannot truncate rank 1");
  std::vector<MultCharacter> chi(chi_.begin(), chi_.end() - 1);
  std::vector<i64> idx;
  for (const auto& c : chi) idx.push_back(c.index());
  std::set<i64> uniq(idx.begin(), idx.end());
  return PrincipalSeriesParam(std::move(chi), psi_, uniq.size() == idx.size());
}

i64 psi_on_unipotent_exponent(const MatFq& u, const AddCharacter& psi) {
  if (!u.is_unit_upper_triangular())
    throw std::invalid_argument("psi_on_unipotent: matrix is not unipotent upper triangular");
  const FqField& f = psi.field();
  i64 s = 0;
  for (int i = 1; i <= u.n() - 1; ++i) s = f.add(s, u.at(i, i + 1));
  return psi.exponent(s);
}

CycloNumber psi_on_unipotent(const MatFq& u, const AddCharacter& psi) {
  return psi.ring().root(psi_on_unipotent_exponent(u, psi));
}

CycloNumber chi_on_borel(const MatFq& b, const PrincipalSeriesParam& param) {
  if (!b.is_lower_triangular())
    throw std::invalid_argument("chi_on_borel: matrix is not lower triangular");
  if (b.n() != param.n()) throw std::invalid_argument("chi_on_borel: rank mismatch");
  i64 e = 0;
  for (int i = 1; i <= b.n(); ++i) {
    const i64 d = b.at(i, i);
    if (d == 0) throw std::invalid_argument("chi_on_borel: zero diagonal entry");
    e += param.chi(i).exponent(d);
  }
  return param.ring().root(e);
}

CycloNumber char_dual(const PrincipalSeriesParam& param, const MatFq& t) {
  if (!t.is_diagonal()) throw std::invalid_argument("char_dual: matrix is not diagonal");
  std::vector<i64> codes;
  for (int i = 1; i <= t.n(); ++i) codes.push_back(t.at(i, i));
  return param.ring().root(char_dual_exponent(param, codes));
}

i64 char_dual_exponent(const PrincipalSeriesParam& param, const std::vector<i64>& torus_codes) {
  if (static_cast<int>(torus_codes.size()) != param.n())
    throw std::invalid_argument("char_dual: rank mismatch");
  i64 e = 0;
  for (int i = 1; i <= param.n(); ++i) {
    const i64 d = torus_codes[static_cast<size_t>(i - 1)];
    if (d == 0) throw std::invalid_argument("char_dual: zero diagonal entry");
    e += param.chi(i).exponent(d);
  }
  return e;
}

}  // namespace fqw
