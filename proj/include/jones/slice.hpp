#pragma once

#include <complex>
#include <string>
#include <vector>

namespace jones {

using Cx = std::complex<double>;

// Dense complex polynomial, coefficient c[k] on t^k.
struct CxPoly {
  std::vector<Cx> c;

  int degree() const { return static_cast<int>(c.size()) - 1; }
  Cx eval(const Cx& z) const;
  void trim(double tol = 0.0);

  static CxPoly from_roots(const std::vector<Cx>& roots);  // monic
  friend CxPoly operator*(const CxPoly& a, const CxPoly& b);
  friend CxPoly operator+(const CxPoly& a, const CxPoly& b);
  friend CxPoly operator-(const CxPoly& a, const CxPoly& b);
};

// Roots via companion-matrix eigenvalues.
std::vector<Cx> poly_roots(const CxPoly& p);

// A point of the nilpotent-slice variety: A, D monic, B, C of degree < deg A,
// subject to A*D - B*C = P_tau where P_tau has roots tau (summing to zero).
struct SlicePoint {
  CxPoly A, B, C, D;
  std::vector<Cx> tau;  // 2m roots

  int n() const { return A.degree(); }
  int m() const { return static_cast<int>(tau.size()) / 2; }
  CxPoly p_tau() const { return CxPoly::from_roots(tau); }
};

// A point of the Milnor fiber u^2 + v^2 + P_tau(z) = 0.
struct FiberPoint {
  Cx u, v, z;
};

// Check A*D - B*C = P_tau and the degree/monic constraints, to coefficient
// tolerance tol.
bool validate(const SlicePoint& p, double tol = 1e-9);

// U = (B+C)/2, V = (B-C)/(2i); then U^2 + V^2 + P_tau = A*D.
void to_uv(const SlicePoint& p, CxPoly* u_out, CxPoly* v_out);

// Inverse change of variables.
void from_uv(const CxPoly& u, const CxPoly& v, CxPoly* b_out, CxPoly* c_out);

// Hilbert-Chow image: the n points (U(z_k), V(z_k), z_k) over the roots z_k
// of A.
std::vector<FiberPoint> hilbert_image(const SlicePoint& p);

// Reconstruct the slice point from n fiber points with pairwise-distinct z
// (Lagrange interpolation of U, V; D by exact division). Throws
// geometry_error on repeated z or when the division remainder exceeds tol.
SlicePoint reconstruct(const std::vector<FiberPoint>& points,
                       const std::vector<Cx>& tau, double tol = 1e-6);

// (A,B,C,D) -> (A,C,B,D); equivalently V -> -V.
SlicePoint involution(const SlicePoint& p);

// True iff some pair has z_i = z_j and u_i = -u_j within tol (the tuple lies
// on the anti-diagonal of the double branched cover).
bool anti_diagonal_check(const std::vector<FiberPoint>& points, double tol = 1e-9);

// Coefficient-list serialization (real imaginary pairs).
std::string serialize_slice_point(const SlicePoint& p);

}  // namespace jones
