#include "sasaki/forms.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace sasaki {

const MultiIndexSet& multi_index_set(int dim, int degree) {
  static std::mutex mtx;
  static std::map<std::pair<int, int>, std::unique_ptr<MultiIndexSet>> cache;
  std::lock_guard<std::mutex> lock(mtx);
  auto& slot = cache[{dim, degree}];
  if (!slot) slot = std::make_unique<MultiIndexSet>(dim, degree);
  return *slot;
}

PForm::PForm(int degree_, int dim_) : degree(degree_), dim(dim_) {
  if (degree < 1 || degree > 4)
    throw std::invalid_argument("PForm: degree must be in {1,...,4}");
  if (dim < degree) throw std::invalid_argument("PForm: dim < degree");
  coeffs = Vector::Zero(binom(dim, degree));
}

PForm PForm::basis(int degree, int dim, std::initializer_list<int> idx) {
  PForm w(degree, dim);
  if (static_cast<int>(idx.size()) != degree)
    throw std::invalid_argument("PForm::basis: index count != degree");
  std::array<int, 4> c{};
  c.fill(-1);
  int t = 0, prev = -1;
  for (int v : idx) {
    if (v <= prev || v >= dim)
      throw std::invalid_argument("PForm::basis: indices must be strictly increasing");
    c[t++] = v;
    prev = v;
  }
  w.coeffs[multi_index_set(dim, degree).rank(c)] = 1.0;
  return w;
}

static void require_same_shape(const PForm& a, const PForm& b, const char* who) {
  if (a.dim != b.dim || a.degree != b.degree)
    throw std::invalid_argument(std::string(who) + ": degree/dimension mismatch");
}

PForm operator+(const PForm& a, const PForm& b) {
  require_same_shape(a, b, "PForm+");
  PForm r = a;
  r.coeffs += b.coeffs;
  return r;
}

PForm operator-(const PForm& a, const PForm& b) {
  require_same_shape(a, b, "PForm-");
  PForm r = a;
  r.coeffs -= b.coeffs;
  return r;
}

PForm operator*(double s, const PForm& a) {
  PForm r = a;
  r.coeffs *= s;
  return r;
}

PForm wedge(const PForm& a, const PForm& b) {
  if (a.dim != b.dim) throw std::invalid_argument("wedge: dimension mismatch");
  const int p = a.degree, q = b.degree;
  if (p + q > 4) throw std::invalid_argument("wedge: resulting degree exceeds 4");
  if (p + q > a.dim)
    throw std::invalid_argument("wedge: resulting degree exceeds the frame dimension");
  const auto& ia = multi_index_set(a.dim, p);
  const auto& ib = multi_index_set(b.dim, q);
  const auto& ic = multi_index_set(a.dim, p + q);
  PForm out(p + q, a.dim);
  int merged[8];
  for (int i = 0; i < ia.size(); ++i) {
    const double ca = a.coeffs[i];
    if (ca == 0.0) continue;
    for (int j = 0; j < ib.size(); ++j) {
      const double cb = b.coeffs[j];
      if (cb == 0.0) continue;
      const int s = merge_sign(ia.at(i).data(), p, ib.at(j).data(), q, merged);
      if (s != 0) out.coeffs[ic.rank(merged)] += s * ca * cb;
    }
  }
  return out;
}

double inner(const PForm& a, const PForm& b) {
  require_same_shape(a, b, "inner");
  return a.coeffs.dot(b.coeffs);
}

PForm interior(const Vector& x, const PForm& w) {
  if (x.size() != w.dim) throw std::invalid_argument("interior: dimension mismatch");
  if (w.degree == 1) throw std::invalid_argument("interior: would drop below degree 1");
  const auto& src = multi_index_set(w.dim, w.degree);
  const auto& dst = multi_index_set(w.dim, w.degree - 1);
  PForm out(w.degree - 1, w.dim);
  // (i_x w)(e_J) = sum_a x_a w(e_a, e_J), signed by the position of a in J
  for (int r = 0; r < src.size(); ++r) {
    const double c = w.coeffs[r];
    if (c == 0.0) continue;
    const auto& idx = src.at(r);
    std::array<int, 4> sub{};
    sub.fill(-1);
    for (int t = 0; t < w.degree; ++t) {
      int k = 0;
      for (int u = 0; u < w.degree; ++u)
        if (u != t) sub[k++] = idx[u];
      const double sign = (t % 2 == 0) ? 1.0 : -1.0;
      out.coeffs[dst.rank(sub)] += sign * x[idx[t]] * c;
    }
  }
  return out;
}

double evaluate(const PForm& w, const std::vector<Vector>& args) {
  if (static_cast<int>(args.size()) != w.degree)
    throw std::invalid_argument("evaluate: argument count != degree");
  PForm cur = w;
  for (std::size_t i = 0; i + 1 < args.size(); ++i) cur = interior(args[i], cur);
  return cur.coeffs.dot(args.back());
}

PForm wedge_pair(int dim, int a, int b) {
  if (a == b || a < 0 || b < 0 || a >= dim || b >= dim)
    throw std::invalid_argument("wedge_pair: bad indices");
  PForm w(2, dim);
  if (a < b)
    w.coeffs[multi_index_set(dim, 2).rank2(a, b)] = 1.0;
  else
    w.coeffs[multi_index_set(dim, 2).rank2(b, a)] = -1.0;
  return w;
}

PForm two_form_from_matrix(const Matrix& a) {
  const int d = static_cast<int>(a.rows());
  if (a.cols() != d || (a + a.transpose()).cwiseAbs().maxCoeff() > 1e-12)
    throw std::invalid_argument("two_form_from_matrix: matrix not antisymmetric");
  const auto& mis = multi_index_set(d, 2);
  PForm w(2, d);
  for (int r = 0; r < mis.size(); ++r) w.coeffs[r] = a(mis.at(r)[0], mis.at(r)[1]);
  return w;
}

Matrix matrix_from_two_form(const PForm& w) {
  if (w.degree != 2) throw std::invalid_argument("matrix_from_two_form: degree != 2");
  const auto& mis = multi_index_set(w.dim, 2);
  Matrix a = Matrix::Zero(w.dim, w.dim);
  for (int r = 0; r < mis.size(); ++r) {
    a(mis.at(r)[0], mis.at(r)[1]) = w.coeffs[r];
    a(mis.at(r)[1], mis.at(r)[0]) = -w.coeffs[r];
  }
  return a;
}

SymOp SymOp::from_assembled(Matrix m, double tol) {
  if (m.rows() != m.cols()) throw std::invalid_argument("SymOp: matrix not square");
  const double asym = (m - m.transpose()).cwiseAbs().maxCoeff();
  if (asym > tol) throw std::invalid_argument("SymOp: asymmetry above tolerance");
  Matrix s = 0.5 * (m + m.transpose());
  return SymOp{std::move(s)};
}

PForm SymOp::apply(const PForm& w) const {
  if (w.degree != 2 || w.coeffs.size() != mat.rows())
    throw std::invalid_argument("SymOp::apply: operand is not a compatible 2-form");
  PForm r = w;
  r.coeffs = mat * w.coeffs;
  return r;
}

SymOp operator+(const SymOp& a, const SymOp& b) { return SymOp{a.mat + b.mat}; }
SymOp operator-(const SymOp& a, const SymOp& b) { return SymOp{a.mat - b.mat}; }
SymOp operator*(double s, const SymOp& a) { return SymOp{s * a.mat}; }

SymOp outer(const PForm& w) {
  if (w.degree != 2) throw std::invalid_argument("outer: degree != 2");
  return SymOp{w.coeffs * w.coeffs.transpose()};
}

SymOp fourform_as_operator(const PForm& omega) {
  if (omega.degree != 4) throw std::invalid_argument("fourform_as_operator: degree != 4");
  const auto& mis2 = multi_index_set(omega.dim, 2);
  const auto& mis4 = multi_index_set(omega.dim, 4);
  const int n = mis2.size();
  Matrix m = Matrix::Zero(n, n);
  int merged[8];
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const int s = merge_sign(mis2.at(i).data(), 2, mis2.at(j).data(), 2, merged);
      if (s == 0) continue;
      const double v = s * omega.coeffs[mis4.rank(merged)];
      m(i, j) = v;
      m(j, i) = v;
    }
  }
  return SymOp{std::move(m)};
}

namespace {

// operator entry as a (0,4) tensor on frame indices, O(a,b,c,d)
double op_entry(const Matrix& m, const MultiIndexSet& mis2, int a, int b, int c, int d) {
  if (a == b || c == d) return 0.0;
  double s = 1.0;
  if (a > b) {
    std::swap(a, b);
    s = -s;
  }
  if (c > d) {
    std::swap(c, d);
    s = -s;
  }
  return s * m(mis2.rank2(a, b), mis2.rank2(c, d));
}

}  // namespace

PForm bianchi_image(const SymOp& op, int dim) {
  const auto& mis2 = multi_index_set(dim, 2);
  const auto& mis4 = multi_index_set(dim, 4);
  if (op.dim2() != mis2.size())
    throw std::invalid_argument("bianchi_image: operator size does not match dim");
  PForm w(4, dim);
  for (int r = 0; r < mis4.size(); ++r) {
    const auto& q = mis4.at(r);
    w.coeffs[r] = op_entry(op.mat, mis2, q[0], q[1], q[2], q[3]) +
                  op_entry(op.mat, mis2, q[1], q[2], q[0], q[3]) +
                  op_entry(op.mat, mis2, q[2], q[0], q[1], q[3]);
  }
  return w;
}

BianchiSplit bianchi_split(const SymOp& op, int dim) {
  // b(op(omega)) = 3 omega, so the Lambda^4 component is b(op)/3
  PForm omega = (1.0 / 3.0) * bianchi_image(op, dim);
  SymOp curv = op - fourform_as_operator(omega);
  return BianchiSplit{std::move(curv), std::move(omega)};
}

SymOp kulkarni_nomizu_operator(const Matrix& h, const Matrix& k) {
  const int d = static_cast<int>(h.rows());
  if (h.cols() != d || k.rows() != d || k.cols() != d)
    throw std::invalid_argument("kulkarni_nomizu: shape mismatch");
  const double hs = (h - h.transpose()).cwiseAbs().maxCoeff();
  const double ha = (h + h.transpose()).cwiseAbs().maxCoeff();
  const double ks = (k - k.transpose()).cwiseAbs().maxCoeff();
  const double ka = (k + k.transpose()).cwiseAbs().maxCoeff();
  const bool h_sym = hs <= 1e-12, h_alt = ha <= 1e-12;
  const bool k_sym = ks <= 1e-12, k_alt = ka <= 1e-12;
  if (!((h_sym && k_sym) || (h_alt && k_alt)))
    throw std::invalid_argument(
        "kulkarni_nomizu: arguments must both be symmetric or both antisymmetric");
  const auto& mis2 = multi_index_set(d, 2);
  const int n = mis2.size();
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) {
    const int a = mis2.at(i)[0], b = mis2.at(i)[1];
    for (int j = i; j < n; ++j) {
      const int c = mis2.at(j)[0], e = mis2.at(j)[1];
      const double v = h(a, c) * k(b, e) + h(b, e) * k(a, c) - h(a, e) * k(b, c) -
                       h(b, c) * k(a, e);
      m(i, j) = v;
      m(j, i) = v;
    }
  }
  return SymOp{std::move(m)};
}

Matrix conjugate(const SymOp& a, const Matrix& basis) {
  return basis.transpose() * a.mat * basis;
}

double op_tensor_entry(const SymOp& op, int dim, int a, int b, int c, int d) {
  return op_entry(op.mat, multi_index_set(dim, 2), a, b, c, d);
}

}  // namespace sasaki
