#include "jones/slice.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <sstream>

#include "jones/errors.hpp"

namespace jones {

Cx CxPoly::eval(const Cx& z) const {
  Cx acc(0, 0);
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
  return acc;
}

void CxPoly::trim(double tol) {
  while (!c.empty() && std::abs(c.back()) <= tol) c.pop_back();
}

CxPoly CxPoly::from_roots(const std::vector<Cx>& roots) {
  CxPoly p;
  p.c = {Cx(1, 0)};
  for (const Cx& r : roots) {
    std::vector<Cx> next(p.c.size() + 1, Cx(0, 0));
    for (size_t i = 0; i < p.c.size(); ++i) {
      next[i + 1] += p.c[i];
      next[i] -= r * p.c[i];
    }
    p.c = next;
  }
  return p;
}

CxPoly operator*(const CxPoly& a, const CxPoly& b) {
  CxPoly p;
  if (a.c.empty() || b.c.empty()) return p;
  p.c.assign(a.c.size() + b.c.size() - 1, Cx(0, 0));
  for (size_t i = 0; i < a.c.size(); ++i)
    for (size_t j = 0; j < b.c.size(); ++j) p.c[i + j] += a.c[i] * b.c[j];
  return p;
}

CxPoly operator+(const CxPoly& a, const CxPoly& b) {
  CxPoly p;
  p.c.assign(std::max(a.c.size(), b.c.size()), Cx(0, 0));
  for (size_t i = 0; i < a.c.size(); ++i) p.c[i] += a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) p.c[i] += b.c[i];
  return p;
}

CxPoly operator-(const CxPoly& a, const CxPoly& b) {
  CxPoly p;
  p.c.assign(std::max(a.c.size(), b.c.size()), Cx(0, 0));
  for (size_t i = 0; i < a.c.size(); ++i) p.c[i] += a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) p.c[i] -= b.c[i];
  return p;
}

std::vector<Cx> poly_roots(const CxPoly& p) {
  CxPoly q = p;
  q.trim(0.0);
  int n = q.degree();
  if (n < 1) return {};
  Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 0; i < n; ++i) comp(i, n - 1) = -q.c[i] / q.c[n];
  for (int i = 1; i < n; ++i) comp(i, i - 1) = Cx(1, 0);
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(comp);
  if (solver.info() != Eigen::Success)
    throw geometry_error("companion-matrix eigensolver failed");
  std::vector<Cx> roots(n);
  for (int i = 0; i < n; ++i) roots[i] = solver.eigenvalues()(i);
  return roots;
}

bool validate(const SlicePoint& p, double tol) {
  int n = p.n();
  int two_m = static_cast<int>(p.tau.size());
  if (n < 0 || p.D.degree() != two_m - n) throw input_error("degree mismatch");
  if (static_cast<int>(p.B.c.size()) > n || static_cast<int>(p.C.c.size()) > n)
    throw input_error("off-diagonal degree too large");
  if (std::abs(p.A.c.back() - Cx(1, 0)) > tol) return false;
  if (std::abs(p.D.c.back() - Cx(1, 0)) > tol) return false;
  CxPoly lhs = p.A * p.D - p.B * p.C;
  CxPoly rhs = p.p_tau();
  CxPoly diff = lhs - rhs;
  for (const Cx& c : diff.c)
    if (std::abs(c) > tol) return false;
  return true;
}

void to_uv(const SlicePoint& p, CxPoly* u_out, CxPoly* v_out) {
  CxPoly u = p.B + p.C;
  CxPoly v = p.B - p.C;
  for (Cx& c : u.c) c *= 0.5;
  for (Cx& c : v.c) c *= Cx(0, -0.5);  // 1/(2i)
  *u_out = u;
  *v_out = v;
}

void from_uv(const CxPoly& u, const CxPoly& v, CxPoly* b_out, CxPoly* c_out) {
  CxPoly iv = v;
  for (Cx& c : iv.c) c *= Cx(0, 1);
  *b_out = u + iv;
  *c_out = u - iv;
}

std::vector<FiberPoint> hilbert_image(const SlicePoint& p) {
  CxPoly U, V;
  to_uv(p, &U, &V);
  std::vector<FiberPoint> out;
  for (const Cx& z : poly_roots(p.A)) out.push_back({U.eval(z), V.eval(z), z});
  return out;
}

SlicePoint reconstruct(const std::vector<FiberPoint>& points,
                       const std::vector<Cx>& tau, double tol) {
  int n = static_cast<int>(points.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (std::abs(points[i].z - points[j].z) == 0.0)
        throw geometry_error("repeated z: outside the distinct-root stratum");

  std::vector<Cx> zs;
  for (const auto& q : points) zs.push_back(q.z);
  CxPoly A = CxPoly::from_roots(zs);

  // Lagrange interpolation of U and V through (z_k, u_k) and (z_k, v_k)
  CxPoly U, V;
  U.c.assign(std::max(n, 1), Cx(0, 0));
  V.c.assign(std::max(n, 1), Cx(0, 0));
  for (int k = 0; k < n; ++k) {
    std::vector<Cx> others;
    Cx denom(1, 0);
    for (int i = 0; i < n; ++i) {
      if (i == k) continue;
      others.push_back(zs[i]);
      denom *= zs[k] - zs[i];
    }
    CxPoly basis = CxPoly::from_roots(others);
    for (size_t i = 0; i < basis.c.size(); ++i) {
      U.c[i] += points[k].u * basis.c[i] / denom;
      V.c[i] += points[k].v * basis.c[i] / denom;
    }
  }

  // D = (U^2 + V^2 + P_tau) / A, checked by remainder
  CxPoly numer = U * U + V * V + CxPoly::from_roots(tau);
  // synthetic division by monic A
  CxPoly rem = numer;
  int dn = numer.degree(), da = A.degree();
  if (da == 0) {
    SlicePoint out;
    out.A = A;
    out.D = numer;
    out.B.c = {};
    out.C.c = {};
    out.tau = tau;
    return out;
  }
  CxPoly D;
  D.c.assign(dn - da + 1, Cx(0, 0));
  for (int k = dn - da; k >= 0; --k) {
    Cx q = rem.c[k + da];
    D.c[k] = q;
    for (int i = 0; i <= da; ++i) rem.c[k + i] -= q * A.c[i];
  }
  double scale = 0;
  for (const Cx& c : numer.c) scale = std::max(scale, std::abs(c));
  for (int i = 0; i < da; ++i)
    if (std::abs(rem.c[i]) > tol * std::max(1.0, scale))
      throw geometry_error("division remainder above tolerance");

  SlicePoint out;
  out.A = A;
  out.D = D;
  from_uv(U, V, &out.B, &out.C);
  out.B.trim(0.0);
  out.C.trim(0.0);
  out.tau = tau;
  return out;
}

SlicePoint involution(const SlicePoint& p) {
  SlicePoint out = p;
  std::swap(out.B, out.C);
  return out;
}

bool anti_diagonal_check(const std::vector<FiberPoint>& points, double tol) {
  for (size_t i = 0; i < points.size(); ++i) {
    if (std::abs(points[i].v) > tol)
      throw input_error("anti-diagonal check expects v = 0 points");
    for (size_t j = i + 1; j < points.size(); ++j)
      if (std::abs(points[i].z - points[j].z) <= tol &&
          std::abs(points[i].u + points[j].u) <= tol)
        return true;
  }
  return false;
}

std::string serialize_slice_point(const SlicePoint& p) {
  std::ostringstream out;
  out.precision(17);
  auto dump = [&out](const char* name, const CxPoly& q) {
    out << name;
    for (const Cx& c : q.c) out << " " << c.real() << " " << c.imag();
    out << "\n";
  };
  dump("A", p.A);
  dump("B", p.B);
  dump("C", p.C);
  dump("D", p.D);
  out << "tau";
  for (const Cx& t : p.tau) out << " " << t.real() << " " << t.imag();
  out << "\n";
  return out.str();
}

}  // namespace jones
