#pragma once

#include <stdexcept>

#include "quandles/exact/eisenstein.hpp"

namespace quandles {

// The Schlafli quandle related to {3,6}: the triangular lattice of
// Eisenstein integers with x * y = y + zeta (x - y), the exact rotation
// by pi/3 of x about y.  Infinite carrier, so the operation is exposed
// as functions instead of a table.
struct EisensteinQuandle {
  static Eisenstein op(const Eisenstein& x, const Eisenstein& y) {
    return y + Eisenstein::zeta() * (x - y);
  }
  static Eisenstein opbar(const Eisenstein& x, const Eisenstein& y) {
    // zeta^-1 = zeta^5 = 1 - zeta
    return y + Eisenstein(1, -1) * (x - y);
  }
  static Eisenstein designated_v() { return Eisenstein(0); }
  static Eisenstein designated_w() { return Eisenstein(1); }
};

// Affine map x -> linear * x + offset over the Eisenstein integers.
struct EisensteinAffine {
  Eisenstein linear{1};
  Eisenstein offset{0};

  Eisenstein apply(const Eisenstein& x) const { return linear * x + offset; }

  // this followed by g.
  EisensteinAffine then(const EisensteinAffine& g) const {
    return {g.linear * linear, g.linear * offset + g.offset};
  }

  static EisensteinAffine right_translation(const Eisenstein& y) {
    // x -> y + zeta (x - y)
    return {Eisenstein::zeta(), (Eisenstein(1) - Eisenstein::zeta()) * y};
  }
};

// Symbolic certificate that the subquandle generated by {v, w} is
// infinite: the inner mapping (*w)^3 (*v)^3 is computed as an affine map
// and must come out as a pure translation by 2(w - v) != 0, whose orbit
// through v is injective.
struct TranslationCertificate {
  Eisenstein v, w;
  EisensteinAffine inner;  // (*w)^3 after (*v)^3
  bool valid = false;

  Eisenstein translation() const { return inner.offset; }
};

inline TranslationCertificate translation_certificate(const Eisenstein& v,
                                                      const Eisenstein& w) {
  if (v == w) throw std::invalid_argument("degenerate pair: v = w");
  EisensteinAffine tv = EisensteinAffine::right_translation(v);
  EisensteinAffine tw = EisensteinAffine::right_translation(w);
  EisensteinAffine cube_v = tv.then(tv).then(tv);
  EisensteinAffine cube_w = tw.then(tw).then(tw);
  TranslationCertificate cert;
  cert.v = v;
  cert.w = w;
  cert.inner = cube_v.then(cube_w);
  cert.valid =
      cert.inner.linear == Eisenstein(1) && !cert.inner.offset.is_zero();
  return cert;
}

}  // namespace quandles
