#ifndef CARTANLAB_SCALAR_FIELD_HPP
#define CARTANLAB_SCALAR_FIELD_HPP

#include <functional>

#include "cartanlab/jet.hpp"

namespace cartanlab {

/// A chart function known through its jets at any point and order.
class ScalarField {
public:
  using Evaluator = std::function<Jet(const Point&, int)>;

  ScalarField() : f_(nullptr) {}
  explicit ScalarField(Evaluator f) : f_(std::move(f)) {}

  bool valid() const { return static_cast<bool>(f_); }
  Jet at(const Point& p, int order) const { return f_(p, order); }

  static ScalarField constant(cplx v);
  static ScalarField coordinate(int mu);

  ScalarField operator-() const;
  ScalarField operator+(const ScalarField& o) const;
  ScalarField operator-(const ScalarField& o) const;
  ScalarField operator*(const ScalarField& o) const;
  ScalarField operator/(const ScalarField& o) const;

  friend ScalarField operator*(cplx s, const ScalarField& f);
  friend ScalarField operator+(cplx s, const ScalarField& f);

private:
  Evaluator f_;
};

ScalarField field_exp(const ScalarField& f);
ScalarField field_log(const ScalarField& f);
ScalarField field_sqrt(const ScalarField& f);
ScalarField field_sin(const ScalarField& f);
ScalarField field_cos(const ScalarField& f);
ScalarField field_pow(const ScalarField& f, int n);

}  // namespace cartanlab

#endif
