#include "cartanlab/form.hpp"

#include <algorithm>
#include <cmath>

namespace cartanlab {

int form_dim(int degree) {
  static const int dims[5] = {1, 4, 6, 4, 1};
  if (degree < 0 || degree > 4) throw std::invalid_argument("form degree out of range");
  return dims[degree];
}

const std::vector<std::vector<int>>& form_basis(int degree) {
  static const std::vector<std::vector<std::vector<int>>> bases = [] {
    std::vector<std::vector<std::vector<int>>> b(5);
    b[0] = {{}};
    for (int i = 0; i < 4; ++i) b[1].push_back({i});
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) b[2].push_back({i, j});
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        for (int k = j + 1; k < 4; ++k) b[3].push_back({i, j, k});
    b[4] = {{0, 1, 2, 3}};
    return b;
  }();
  if (degree < 0 || degree > 4) throw std::invalid_argument("form degree out of range");
  return bases[degree];
}

int form_component_index(int degree, const std::vector<int>& idx) {
  const auto& basis = form_basis(degree);
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (basis[i] == idx) return static_cast<int>(i);
  throw std::invalid_argument("bad form component index tuple");
}

int merge_indices(const std::vector<int>& a, const std::vector<int>& b,
                  std::vector<int>& out) {
  out.clear();
  out.reserve(a.size() + b.size());
  out.insert(out.end(), a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  // bubble sort, counting swaps
  int sign = 1;
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t j = 0; j + 1 < out.size() - i; ++j) {
      if (out[j] == out[j + 1]) return 0;
      if (out[j] > out[j + 1]) {
        std::swap(out[j], out[j + 1]);
        sign = -sign;
      }
    }
  for (std::size_t j = 0; j + 1 < out.size(); ++j)
    if (out[j] == out[j + 1]) return 0;
  return sign;
}

Form::Form(int degree, int order, const Point& base) : degree_(degree) {
  comp_.assign(form_dim(degree), Jet(order, base));
}

Form Form::zero(int degree, int order, const Point& base) {
  return Form(degree, order, base);
}

Form Form::dx(int mu, int order, const Point& base) {
  Form f(1, order, base);
  f.comp_[mu] = Jet::constant(1.0, order, base);
  return f;
}

Form Form::operator-() const {
  Form r = *this;
  for (auto& c : r.comp_) c = -c;
  return r;
}

Form Form::operator+(const Form& o) const {
  if (degree_ != o.degree_) throw std::invalid_argument("form degree mismatch in +");
  Form r = *this;
  for (int i = 0; i < n_components(); ++i) r.comp_[i] = comp_[i] + o.comp_[i];
  return r;
}

Form Form::operator-(const Form& o) const { return *this + (-o); }

Form Form::operator*(cplx s) const {
  Form r = *this;
  for (auto& c : r.comp_) c = c * s;
  return r;
}

Form Form::operator*(const Jet& s) const {
  Form r = *this;
  for (auto& c : r.comp_) c = c * s;
  return r;
}

Form Form::conj() const {
  Form r = *this;
  for (auto& c : r.comp_) c = c.conj();
  return r;
}

Form Form::truncated(int new_order) const {
  Form r = *this;
  for (auto& c : r.comp_) c = c.truncated(new_order);
  return r;
}

double Form::max_abs() const {
  double m = 0;
  for (const auto& c : comp_) m = std::max(m, c.max_abs());
  return m;
}

double Form::max_value() const {
  double m = 0;
  for (const auto& c : comp_) m = std::max(m, std::abs(c.value()));
  return m;
}

Form ext_d(const Form& a) {
  if (a.degree() == 4) throw std::domain_error("top degree");
  Form r(a.degree() + 1, a.order() - 1, a.base());
  const auto& basis = form_basis(a.degree());
  std::vector<int> merged;
  for (int i = 0; i < a.n_components(); ++i) {
    for (int mu = 0; mu < 4; ++mu) {
      int sign = merge_indices({mu}, basis[i], merged);
      if (sign == 0) continue;
      int k = form_component_index(a.degree() + 1, merged);
      Jet d = jet_partial(a.component(i), mu);
      r.component(k) += (sign > 0) ? d : -d;
    }
  }
  return r;
}

Form wedge(const Form& a, const Form& b) {
  if (a.degree() + b.degree() > 4)
    throw std::domain_error("wedge degree exceeds chart dimension");
  int order = std::min(a.order(), b.order());
  Form r(a.degree() + b.degree(), order, a.base());
  const auto& ba = form_basis(a.degree());
  const auto& bb = form_basis(b.degree());
  std::vector<int> merged;
  for (int i = 0; i < a.n_components(); ++i)
    for (int j = 0; j < b.n_components(); ++j) {
      int sign = merge_indices(ba[i], bb[j], merged);
      if (sign == 0) continue;
      int k = form_component_index(r.degree(), merged);
      Jet p = a.component(i) * b.component(j);
      r.component(k) += (sign > 0) ? p : -p;
    }
  return r;
}

}  // namespace cartanlab
