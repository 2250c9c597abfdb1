#include "cartanlab/grassmann.hpp"

#include <bit>
#include <stdexcept>

namespace cartanlab {

int interleave_sign(std::uint16_t s, std::uint16_t t) {
  if (s & t) return 0;
  // count pairs (i in s, j in t) with j < i
  int sign = 0;
  for (int i = 0; i < 16; ++i) {
    if (!(s >> i & 1)) continue;
    sign += std::popcount(static_cast<std::uint16_t>(t & ((1u << i) - 1)));
  }
  return (sign & 1) ? -1 : 1;
}

void GrassmannElement::add_term(std::uint16_t mask, const MatrixForm& coeff) {
  auto it = terms_.find(mask);
  if (it == terms_.end())
    terms_.emplace(mask, coeff);
  else
    it->second += coeff;
}

GrassmannElement GrassmannElement::from_matrix(const MatrixForm& m) {
  return term(0, m);
}

GrassmannElement GrassmannElement::term(std::uint16_t mask, const MatrixForm& coeff) {
  if (std::popcount(mask) > kGhostCap)
    throw std::invalid_argument("ghost degree exceeds the cap");
  GrassmannElement g;
  g.terms_.emplace(mask, coeff);
  return g;
}

const MatrixForm* GrassmannElement::coeff(std::uint16_t mask) const {
  auto it = terms_.find(mask);
  return it == terms_.end() ? nullptr : &it->second;
}

GrassmannElement GrassmannElement::operator-() const {
  GrassmannElement g;
  for (const auto& [m, c] : terms_) g.terms_.emplace(m, -c);
  return g;
}

GrassmannElement GrassmannElement::operator+(const GrassmannElement& o) const {
  GrassmannElement g = *this;
  for (const auto& [m, c] : o.terms_) g.add_term(m, c);
  return g;
}

GrassmannElement GrassmannElement::operator-(const GrassmannElement& o) const {
  return *this + (-o);
}

GrassmannElement GrassmannElement::operator*(const GrassmannElement& o) const {
  GrassmannElement g;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) {
      const int il = interleave_sign(ma, mb);
      if (il == 0) continue;
      const std::uint16_t mask = ma | mb;
      if (std::popcount(mask) > kGhostCap)
        throw std::invalid_argument("ghost degree exceeds the cap");
      // moving theta_T (|T| generators) left past the form coefficient c_S
      const int koszul = (std::popcount(mb) * ca.degree()) & 1 ? -1 : 1;
      g.add_term(mask, ca * cb * cplx(il * koszul));
    }
  return g;
}

GrassmannElement GrassmannElement::operator*(cplx s) const {
  GrassmannElement g;
  for (const auto& [m, c] : terms_) g.terms_.emplace(m, c * s);
  return g;
}

int GrassmannElement::total_degree() const {
  if (terms_.empty()) throw std::logic_error("degree of empty element");
  int deg = -1;
  for (const auto& [m, c] : terms_) {
    const int d = c.degree() + std::popcount(m);
    if (deg < 0) deg = d;
    if (d != deg) throw std::logic_error("inhomogeneous element has no degree");
  }
  return deg;
}

int GrassmannElement::max_ghost_degree() const {
  int g = 0;
  for (const auto& [m, c] : terms_) g = std::max(g, std::popcount(m));
  return g;
}

double GrassmannElement::max_abs() const {
  double m = 0;
  for (const auto& [mk, c] : terms_) m = std::max(m, c.max_abs());
  return m;
}

GrassmannElement ext_d(const GrassmannElement& g) {
  GrassmannElement out;
  for (const auto& [m, c] : g.terms_) {
    const int sign = std::popcount(m) & 1 ? -1 : 1;
    out.add_term(m, ext_d(c) * cplx(sign));
  }
  return out;
}

GrassmannElement graded_comm(const GrassmannElement& a, const GrassmannElement& b) {
  if (a.empty() || b.empty()) return {};
  const int sign = (a.total_degree() * b.total_degree()) & 1 ? -1 : 1;
  return a * b - cplx(sign) * (b * a);
}

}  // namespace cartanlab
