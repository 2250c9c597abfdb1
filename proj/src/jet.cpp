#include "cartanlab/jet.hpp"

#include <cmath>
#include <mutex>

namespace cartanlab {

namespace {
constexpr int kPackBase = 32;

int total(const MultiIndex& a) { return a[0] + a[1] + a[2] + a[3]; }

// one (i,j)->k product table per order, built on first use
struct ProductTable {
  struct Entry {
    int i, j, k;
  };
  std::vector<Entry> entries;
};

std::vector<MultiIndexTable> g_tables;
std::vector<ProductTable> g_products;
std::mutex g_table_mutex;

void ensure_tables(int order) {
  std::lock_guard<std::mutex> lock(g_table_mutex);
  while (static_cast<int>(g_tables.size()) <= order) {
    int K = static_cast<int>(g_tables.size());
    MultiIndexTable t;
    t.order = K;
    for (int n = 0; n <= K; ++n) {
      for (int a0 = n; a0 >= 0; --a0)
        for (int a1 = n - a0; a1 >= 0; --a1)
          for (int a2 = n - a0 - a1; a2 >= 0; --a2) {
            int a3 = n - a0 - a1 - a2;
            t.indices.push_back({a0, a1, a2, a3});
          }
    }
    t.rank_of_packed.assign(kPackBase * kPackBase * kPackBase * kPackBase, -1);
    for (std::size_t r = 0; r < t.indices.size(); ++r)
      t.rank_of_packed[MultiIndexTable::pack(t.indices[r])] = static_cast<int>(r);

    ProductTable p;
    for (std::size_t i = 0; i < t.indices.size(); ++i)
      for (std::size_t j = 0; j < t.indices.size(); ++j) {
        const auto& a = t.indices[i];
        const auto& b = t.indices[j];
        if (total(a) + total(b) > K) continue;
        MultiIndex s{a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]};
        p.entries.push_back({static_cast<int>(i), static_cast<int>(j),
                             t.rank_of_packed[MultiIndexTable::pack(s)]});
      }
    g_tables.push_back(std::move(t));
    g_products.push_back(std::move(p));
  }
}
}  // namespace

const MultiIndexTable& MultiIndexTable::get(int order) {
  if (order < 0) throw std::invalid_argument("jet order must be >= 0");
  ensure_tables(order);
  return g_tables[order];
}

int MultiIndexTable::pack(const MultiIndex& a) {
  return a[0] + kPackBase * (a[1] + kPackBase * (a[2] + kPackBase * a[3]));
}

int MultiIndexTable::rank(const MultiIndex& a) const {
  int r = rank_of_packed[pack(a)];
  if (r < 0) throw std::out_of_range("multi-index beyond jet order");
  return r;
}

Jet::Jet(int order, const Point& base)
    : order_(order), base_(base), c_(MultiIndexTable::get(order).size(), cplx(0)) {}

Jet Jet::constant(cplx v, int order, const Point& base) {
  Jet j(order, base);
  j.c_[0] = v;
  return j;
}

Jet Jet::coordinate(int mu, int order, const Point& base) {
  Jet j(order, base);
  j.c_[0] = base[mu];
  if (order >= 1) {
    MultiIndex e{0, 0, 0, 0};
    e[mu] = 1;
    j.c_[MultiIndexTable::get(order).rank(e)] = 1.0;
  }
  return j;
}

cplx Jet::coeff(const MultiIndex& a) const {
  return c_[MultiIndexTable::get(order_).rank(a)];
}

cplx& Jet::coeff_ref(const MultiIndex& a) {
  return c_[MultiIndexTable::get(order_).rank(a)];
}

Jet Jet::truncated(int new_order) const {
  if (new_order > order_) throw std::invalid_argument("cannot extend jet order");
  if (new_order == order_) return *this;
  Jet r(new_order, base_);
  // graded-lex order: lower-order coefficients are a prefix
  for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = c_[i];
  return r;
}

void Jet::check_compatible(const Jet& o) const {
  if (base_ != o.base_)
    throw std::invalid_argument("jet base points differ");
}

Jet Jet::operator-() const {
  Jet r = *this;
  for (auto& v : r.c_) v = -v;
  return r;
}

Jet Jet::operator+(const Jet& o) const {
  check_compatible(o);
  if (order_ > o.order_) return truncated(o.order_) + o;
  if (o.order_ > order_) return *this + o.truncated(order_);
  Jet r = *this;
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] += o.c_[i];
  return r;
}

Jet Jet::operator-(const Jet& o) const { return *this + (-o); }

Jet Jet::operator*(const Jet& o) const {
  check_compatible(o);
  int K = std::min(order_, o.order_);
  Jet a = truncated(K), b = o.truncated(K);
  Jet r(K, base_);
  ensure_tables(K);
  for (const auto& e : g_products[K].entries)
    r.c_[e.k] += a.c_[e.i] * b.c_[e.j];
  return r;
}

Jet Jet::operator/(const Jet& o) const { return *this * o.reciprocal(); }

Jet Jet::operator+(cplx s) const {
  Jet r = *this;
  r.c_[0] += s;
  return r;
}

Jet Jet::operator-(cplx s) const { return *this + (-s); }

Jet Jet::operator*(cplx s) const {
  Jet r = *this;
  for (auto& v : r.c_) v *= s;
  return r;
}

Jet Jet::conj() const {
  Jet r = *this;
  for (auto& v : r.c_) v = std::conj(v);
  return r;
}

double Jet::max_abs() const {
  double m = 0;
  for (const auto& v : c_) m = std::max(m, std::abs(v));
  return m;
}

Jet compose_series(const Jet& j, const std::vector<cplx>& d) {
  // Horner in u = j - j(0); u has zero constant term so u^{K+1} = 0.
  int K = j.order_;
  Jet u = j;
  u.c_[0] = 0;
  Jet r = Jet::constant(d[K], K, j.base_);
  for (int k = K - 1; k >= 0; --k) r = r * u + d[k];
  return r;
}

Jet Jet::reciprocal() const {
  cplx c0 = c_[0];
  if (std::abs(c0) == 0.0) throw std::domain_error("jet reciprocal: zero constant term");
  // d[k] = (-1)^k / c0^{k+1}
  std::vector<cplx> d(order_ + 1);
  cplx p = cplx(1) / c0;
  for (int k = 0; k <= order_; ++k) {
    d[k] = (k % 2 == 0 ? p : -p);
    p /= c0;
  }
  return compose_series(*this, d);
}

Jet Jet::pow_int(int n) const {
  if (n < 0) return reciprocal().pow_int(-n);
  Jet r = Jet::constant(1.0, order_, base_);
  Jet b = *this;
  while (n > 0) {
    if (n & 1) r = r * b;
    b = b * b;
    n >>= 1;
  }
  return r;
}

Jet jet_partial(const Jet& j, int mu) {
  if (j.order() < 1) throw std::domain_error("derivative order exhausted");
  Jet r(j.order() - 1, j.base());
  const auto& tout = MultiIndexTable::get(j.order() - 1);
  for (std::size_t i = 0; i < tout.indices.size(); ++i) {
    MultiIndex a = tout.indices[i];
    MultiIndex ap = a;
    ap[mu] += 1;
    r.coeff_ref(a) = j.coeff(ap) * static_cast<double>(ap[mu]);
  }
  return r;
}

Jet jet_exp(const Jet& j) {
  cplx c0 = j.value();
  std::vector<cplx> d(j.order() + 1);
  cplx e = std::exp(c0);
  double fact = 1;
  for (int k = 0; k <= j.order(); ++k) {
    d[k] = e / fact;
    fact *= (k + 1);
  }
  return compose_series(j, d);
}

Jet jet_log(const Jet& j) {
  cplx c0 = j.value();
  if (std::abs(c0.imag()) < 1e-14 && c0.real() <= 0.0)
    throw std::domain_error("log of non-positive value");
  std::vector<cplx> d(j.order() + 1);
  d[0] = std::log(c0);
  cplx p = cplx(1) / c0;
  for (int k = 1; k <= j.order(); ++k) {
    d[k] = (k % 2 == 1 ? p : -p) / static_cast<double>(k);
    p /= c0;
  }
  return compose_series(j, d);
}

Jet jet_sqrt(const Jet& j) {
  cplx c0 = j.value();
  if (std::abs(c0.imag()) < 1e-14 && c0.real() <= 0.0)
    throw std::domain_error("sqrt of non-positive value");
  std::vector<cplx> d(j.order() + 1);
  cplx s = std::sqrt(c0);
  // d[k] = binom(1/2, k) c0^{1/2 - k}
  cplx coef = 1.0;
  cplx p = s;
  for (int k = 0; k <= j.order(); ++k) {
    d[k] = coef * p;
    coef *= (0.5 - k) / static_cast<double>(k + 1);
    p /= c0;
  }
  return compose_series(j, d);
}

Jet jet_sin(const Jet& j) {
  cplx c0 = j.value();
  std::vector<cplx> d(j.order() + 1);
  cplx s = std::sin(c0), c = std::cos(c0);
  double fact = 1;
  for (int k = 0; k <= j.order(); ++k) {
    switch (k % 4) {
      case 0: d[k] = s / fact; break;
      case 1: d[k] = c / fact; break;
      case 2: d[k] = -s / fact; break;
      case 3: d[k] = -c / fact; break;
    }
    fact *= (k + 1);
  }
  return compose_series(j, d);
}

Jet jet_cos(const Jet& j) {
  cplx c0 = j.value();
  std::vector<cplx> d(j.order() + 1);
  cplx s = std::sin(c0), c = std::cos(c0);
  double fact = 1;
  for (int k = 0; k <= j.order(); ++k) {
    switch (k % 4) {
      case 0: d[k] = c / fact; break;
      case 1: d[k] = -s / fact; break;
      case 2: d[k] = -c / fact; break;
      case 3: d[k] = s / fact; break;
    }
    fact *= (k + 1);
  }
  return compose_series(j, d);
}

}  // namespace cartanlab
