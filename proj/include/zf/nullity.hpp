#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "zf/graph.hpp"
#include "zf/search.hpp"

// Exact-rational maximum-nullity witnesses: involution matrices L with
// L^2 = I and the doubling construction that certifies M = Z = n 2^{s-1}
// for iterated Cartesian products with P_2.

namespace zf {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

class RationalMatrix {
 public:
  RationalMatrix() = default;
  explicit RationalMatrix(int dim) : dim_(dim), entries_(dim * dim) {}

  int dim() const { return dim_; }
  Rational& at(int i, int j) { return entries_[i * dim_ + j]; }
  const Rational& at(int i, int j) const { return entries_[i * dim_ + j]; }

  static RationalMatrix identity(int n);
  static RationalMatrix ones(int n);  // J_n

  RationalMatrix operator*(const RationalMatrix& o) const;
  RationalMatrix operator+(const RationalMatrix& o) const;
  RationalMatrix operator-(const RationalMatrix& o) const;
  RationalMatrix scaled(const Rational& c) const;
  bool operator==(const RationalMatrix& o) const = default;
  bool is_symmetric() const;

 private:
  int dim_ = 0;
  std::vector<Rational> entries_;
};

// Off-diagonal pattern matches E(G) exactly; diagonal unconstrained.
bool conforms(const RationalMatrix& a, const Graph& g);

// dim - rank, by fraction-free Bareiss elimination on the denominator-
// cleared integer matrix.
int nullity(const RationalMatrix& a);
int rank(const RationalMatrix& a);

// Known involutions: L^2 = I with L in S(G).
enum class InvolutionFamily { P2, Kn };
RationalMatrix involution_witness(InvolutionFamily family, int n);

struct HatStep {
  Graph g_next;              // G box P_2
  RationalMatrix h;          // [[L, I], [I, L]], nullity = |G|
  RationalMatrix m_unscaled; // [[L, I], [I, -L]], M^2 = 2I
  RationalMatrix l_next;     // rational involution on G box P_2 (L_next^2 = I)
};

// Requires L in S(G) with L^2 = I (checked). The 1/sqrt(2) factor of the
// paper-style hat matrix is never represented: m_unscaled satisfies
// M^2 = 2I, and l_next uses a 3-4-5 rotation so iteration stays rational.
HatStep hat_step(const RationalMatrix& l, const Graph& g);

struct CertificationReport {
  Graph graph;               // G (box P_2)^s
  int m_lower = 0;           // nullity of the final H
  int z = 0;                 // exact when z_exact, else the witness bound
  bool z_exact = false;
  int pt = 0;
  bool m_squared_is_2i = true;  // checked at every step
  RationalMatrix h;             // final-step H
};

// Runs s hat steps from the family involution, checks M(G') = Z(G') =
// n 2^{s-1} when exact Z search is in budget, and pt = 1 both via the
// matching-graph argument and direct propagation.
CertificationReport certify_family(InvolutionFamily family, int n, int s,
                                   const SearchBudget& budget = {});

// JSON export: matrix of exact "p/q" strings plus the graph6 record.
std::string witness_to_json(const CertificationReport& r);

}  // namespace zf
