#include "zf/nullity.hpp"

#include <sstream>

#include "json.hpp"

namespace zf {

RationalMatrix RationalMatrix::identity(int n) {
  RationalMatrix m(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::ones(int n) {
  RationalMatrix m(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = 1;
  return m;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& o) const {
  if (dim_ != o.dim_) throw std::invalid_argument("matrix dim mismatch");
  RationalMatrix r(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int k = 0; k < dim_; ++k) {
      const Rational& a = at(i, k);
      if (a == 0) continue;
      for (int j = 0; j < dim_; ++j) r.at(i, j) += a * o.at(k, j);
    }
  return r;
}

RationalMatrix RationalMatrix::operator+(const RationalMatrix& o) const {
  if (dim_ != o.dim_) throw std::invalid_argument("matrix dim mismatch");
  RationalMatrix r(dim_);
  for (int i = 0; i < dim_ * dim_; ++i) r.entries_[i] = entries_[i] + o.entries_[i];
  return r;
}

RationalMatrix RationalMatrix::operator-(const RationalMatrix& o) const {
  if (dim_ != o.dim_) throw std::invalid_argument("matrix dim mismatch");
  RationalMatrix r(dim_);
  for (int i = 0; i < dim_ * dim_; ++i) r.entries_[i] = entries_[i] - o.entries_[i];
  return r;
}

RationalMatrix RationalMatrix::scaled(const Rational& c) const {
  RationalMatrix r(dim_);
  for (int i = 0; i < dim_ * dim_; ++i) r.entries_[i] = entries_[i] * c;
  return r;
}

bool RationalMatrix::is_symmetric() const {
  for (int i = 0; i < dim_; ++i)
    for (int j = i + 1; j < dim_; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

bool conforms(const RationalMatrix& a, const Graph& g) {
  if (a.dim() != g.order()) throw std::invalid_argument("matrix/graph dim mismatch");
  for (int i = 0; i < a.dim(); ++i)
    for (int j = i + 1; j < a.dim(); ++j)
      if ((a.at(i, j) != 0) != g.has_edge(i, j)) return false;
  return true;
}

int rank(const RationalMatrix& a) {
  int n = a.dim();
  // Clear denominators with one global scalar; rank is unchanged.
  BigInt lcm = 1;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      BigInt d = denominator(a.at(i, j));
      lcm = lcm / gcd(lcm, d) * d;
    }
  std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      m[i][j] = numerator(a.at(i, j)) * (lcm / denominator(a.at(i, j)));

  // Bareiss fraction-free elimination.
  BigInt prev = 1;
  int r = 0;
  for (int c = 0; c < n && r < n; ++c) {
    int pivot = -1;
    for (int i = r; i < n; ++i)
      if (m[i][c] != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[r], m[pivot]);
    for (int i = r + 1; i < n; ++i) {
      for (int j = c + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[r][c] - m[i][c] * m[r][j]) / prev;
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  return r;
}

int nullity(const RationalMatrix& a) { return a.dim() - rank(a); }

RationalMatrix involution_witness(InvolutionFamily family, int n) {
  RationalMatrix l;
  Graph g;
  if (family == InvolutionFamily::P2) {
    l = RationalMatrix(2);
    l.at(0, 1) = l.at(1, 0) = 1;
    g = path(2);
  } else {
    if (n < 2) throw std::invalid_argument("K_n involution needs n >= 2");
    l = RationalMatrix::identity(n) -
        RationalMatrix::ones(n).scaled(Rational(2, n));
    g = complete(n);
  }
  if (l * l != RationalMatrix::identity(l.dim()) || !conforms(l, g))
    throw std::logic_error("involution witness failed self-check");
  return l;
}

HatStep hat_step(const RationalMatrix& l, const Graph& g) {
  int n = g.order();
  if (l.dim() != n || !l.is_symmetric() || !conforms(l, g))
    throw std::invalid_argument("hat_step: L is not in S(G)");
  if (l * l != RationalMatrix::identity(n))
    throw std::invalid_argument("hat_step: L^2 != I");

  HatStep hs;
  hs.g_next = cartesian_product(g, path(2));
  // Product vertex (v, i) of G box P_2 sits at index 2v + i; block index
  // (copy-major) is i*n + v.
  auto idx = [n](int copy, int v) { return 2 * v + copy; };
  hs.h = RationalMatrix(2 * n);
  hs.m_unscaled = RationalMatrix(2 * n);
  hs.l_next = RationalMatrix(2 * n);
  const Rational c(3, 5), s(4, 5);  // rational rotation keeping L_next^2 = I
  for (int v = 0; v < n; ++v)
    for (int w = 0; w < n; ++w) {
      const Rational& lv = l.at(v, w);
      hs.h.at(idx(0, v), idx(0, w)) = lv;
      hs.h.at(idx(1, v), idx(1, w)) = lv;
      hs.m_unscaled.at(idx(0, v), idx(0, w)) = lv;
      hs.m_unscaled.at(idx(1, v), idx(1, w)) = -lv;
      hs.l_next.at(idx(0, v), idx(0, w)) = c * lv;
      hs.l_next.at(idx(1, v), idx(1, w)) = -c * lv;
    }
  for (int v = 0; v < n; ++v) {
    hs.h.at(idx(0, v), idx(1, v)) = hs.h.at(idx(1, v), idx(0, v)) = 1;
    hs.m_unscaled.at(idx(0, v), idx(1, v)) = 1;
    hs.m_unscaled.at(idx(1, v), idx(0, v)) = 1;
    hs.l_next.at(idx(0, v), idx(1, v)) = s;
    hs.l_next.at(idx(1, v), idx(0, v)) = s;
  }

  if (!conforms(hs.h, hs.g_next) || !conforms(hs.m_unscaled, hs.g_next) ||
      !conforms(hs.l_next, hs.g_next))
    throw std::logic_error("hat_step output does not conform to G box P_2");
  if (hs.m_unscaled * hs.m_unscaled !=
      RationalMatrix::identity(2 * n).scaled(2))
    throw std::logic_error("hat_step: M^2 != 2I");
  if (hs.l_next * hs.l_next != RationalMatrix::identity(2 * n))
    throw std::logic_error("hat_step: L_next^2 != I");
  if (nullity(hs.h) != n) throw std::logic_error("hat_step: null(H) != n");
  return hs;
}

CertificationReport certify_family(InvolutionFamily family, int n, int s,
                                   const SearchBudget& budget) {
  if (s < 1) throw std::invalid_argument("certify_family needs s >= 1");
  RationalMatrix l = involution_witness(family, n);
  Graph g = family == InvolutionFamily::P2 ? path(2) : complete(n);
  int base = g.order();

  CertificationReport r;
  HatStep hs;
  for (int i = 0; i < s; ++i) {
    hs = hat_step(l, g);
    g = hs.g_next;
    l = hs.l_next;
  }
  r.graph = g;
  r.h = hs.h;
  r.m_lower = nullity(hs.h);
  int half = g.order() / 2;
  if (r.m_lower != half || half != base << (s - 1))
    throw std::logic_error("witness nullity does not match n 2^{s-1}");

  // One copy of the previous product is a forcing set of half size, so
  // half <= M <= Z <= half; exhaustive search re-verifies when in budget.
  r.z = half;
  if (g.order() <= budget.max_n_exact_z) {
    ZResult zr = zero_forcing_number(g, budget);
    if (zr.z != half) throw std::logic_error("searched Z disagrees with witness");
    r.z_exact = true;
  }
  // pt = 1: the half-copy forces everything in one round.
  VertexSet copy = 0;
  for (int v = 0; v < g.order(); v += 2) copy |= bit(v);
  PropagationTrace tr = propagate(g, copy);
  if (!tr.complete || tr.propagation_time() != 1)
    throw std::logic_error("product copy does not force in one round");
  r.pt = 1;
  return r;
}

std::string witness_to_json(const CertificationReport& r) {
  nlohmann::json j;
  j["graph6"] = encode_graph6(r.graph);
  j["n"] = r.graph.order();
  j["M_lower"] = r.m_lower;
  j["Z"] = r.z;
  j["Z_exact"] = r.z_exact;
  j["pt"] = r.pt;
  auto rows = nlohmann::json::array();
  for (int i = 0; i < r.h.dim(); ++i) {
    auto row = nlohmann::json::array();
    for (int k = 0; k < r.h.dim(); ++k) {
      std::ostringstream os;
      os << r.h.at(i, k);
      row.push_back(os.str());
    }
    rows.push_back(row);
  }
  j["H"] = rows;
  return j.dump();
}

}  // namespace zf
