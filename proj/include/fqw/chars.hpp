#pragma once

#include <vector>

#include "fqw/cyclo.hpp"
#include "fqw/fqlinalg.hpp"
#include "fqw/gfq.hpp"

namespace fqw {

/// Conductor of the value ring for characters of F_q: m = p(q-1) holds every
/// value of the standard additive character (order p) and of every
/// multiplicative character (order dividing q-1).
inline i64 character_conductor(const FqField& f) { return f.p() * (f.q() - 1); }

/// The fixed nontrivial additive character psi(x) = zeta_p^{Tr(x)}, realized
/// inside Q(zeta_m) via zeta_p = zeta_m^{q-1}.
class AddCharacter {
 public:
  AddCharacter(FqFieldPtr field, CycloRingPtr ring);

  const FqField& field() const { return *field_; }
  const CycloRing& ring() const { return *ring_; }

  /// Exponent e with psi(x) = zeta_m^e.
  i64 exponent(i64 code) const { return field_->trace(code) * (field_->q() - 1); }
  CycloNumber value(i64 code) const { return ring_->root(exponent(code)); }

 private:
  FqFieldPtr field_;
  CycloRingPtr ring_;
};

/// Multiplicative character chi_j(g^t) = zeta_{q-1}^{jt}, realized inside
/// Q(zeta_m) via zeta_{q-1} = zeta_m^p.  Index 0 is the trivial character.
class MultCharacter {
 public:
  MultCharacter(FqFieldPtr field, CycloRingPtr ring, i64 index);

  i64 index() const { return index_; }
  const FqField& field() const { return *field_; }
  const CycloRing& ring() const { return *ring_; }

  i64 exponent(i64 unit_code) const {
    return field_->p() * ((index_ * field_->dlog(unit_code)) % (field_->q() - 1));
  }
  CycloNumber value(i64 unit_code) const { return ring_->root(exponent(unit_code)); }

 private:
  FqFieldPtr field_;
  CycloRingPtr ring_;
  i64 index_;
};

/// The data of a principal series: an ordered tuple (chi_1, ..., chi_n) of
/// multiplicative characters together with the additive character psi.  The
/// representation is irreducible exactly when the chi_i are pairwise
/// distinct; sums are defined either way, so non-distinct tuples are accepted
/// but flagged.
class PrincipalSeriesParam {
 public:
  static PrincipalSeriesParam make(FqFieldPtr field, CycloRingPtr ring,
                                   const std::vector<i64>& chi_indices);

  int n() const { return static_cast<int>(chi_.size()); }
  const FqField& field() const { return psi_.field(); }
  const CycloRing& ring() const { return psi_.ring(); }
  const AddCharacter& psi() const { return psi_; }
  /// 1-based, matching the tuple (chi_1, ..., chi_n).
  const MultCharacter& chi(int i) const { return chi_.at(static_cast<size_t>(i - 1)); }
  std::vector<i64> chi_indices() const;
  bool distinct() const { return distinct_; }

  /// Parameter (chi_1, ..., chi_{n-1}) for the rank below.
  PrincipalSeriesParam truncated() const;

 private:
  PrincipalSeriesParam(std::vector<MultCharacter> chi, AddCharacter psi, bool distinct)
      : chi_(std::move(chi)), psi_(std::move(psi)), distinct_(distinct) {}
  std::vector<MultCharacter> chi_;
  AddCharacter psi_;
  bool distinct_;
};

/// psi applied to a unit upper-triangular matrix: psi(sum of the
/// superdiagonal).  Throws unless u is unipotent upper triangular.
CycloNumber psi_on_unipotent(const MatFq& u, const AddCharacter& psi);
i64 psi_on_unipotent_exponent(const MatFq& u, const AddCharacter& psi);

/// The Borel character prod_i chi_i(b_ii) on lower-triangular invertible b.
CycloNumber chi_on_borel(const MatFq& b, const PrincipalSeriesParam& param);

/// prod_i chi_i(t_ii) on an invertible diagonal matrix; the torus-dual pairing
/// used by the Fourier-inversion oracle.
CycloNumber char_dual(const PrincipalSeriesParam& param, const MatFq& t);
i64 char_dual_exponent(const PrincipalSeriesParam& param, const std::vector<i64>& torus_codes);

}  // namespace fqw
