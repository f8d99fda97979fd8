#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "json.hpp"
#include "zf/nullity.hpp"

using namespace zf;

TEST_CASE("rank and nullity") {
  CHECK(rank(RationalMatrix::identity(4)) == 4);
  CHECK(nullity(RationalMatrix::identity(4)) == 0);
  CHECK(rank(RationalMatrix::ones(5)) == 1);
  CHECK(nullity(RationalMatrix::ones(5)) == 4);
  CHECK(rank(RationalMatrix(3)) == 0);

  // A matrix whose rank needs exact arithmetic: small rational entries.
  RationalMatrix a(3);
  a.at(0, 0) = Rational(1, 3);
  a.at(0, 1) = Rational(1, 5);
  a.at(1, 0) = Rational(5, 3);
  a.at(1, 1) = 1;  // row 1 = 5 * row 0
  a.at(2, 2) = Rational(7, 11);
  CHECK(rank(a) == 2);
}

TEST_CASE("involution witnesses") {
  RationalMatrix p2 = involution_witness(InvolutionFamily::P2, 2);
  CHECK(p2 * p2 == RationalMatrix::identity(2));

  for (int n : {2, 3, 4, 5}) {
    RationalMatrix l = involution_witness(InvolutionFamily::Kn, n);
    CHECK(l * l == RationalMatrix::identity(n));
    CHECK(conforms(l, complete(n)));
    CHECK(l.is_symmetric());
  }
  CHECK_THROWS(involution_witness(InvolutionFamily::Kn, 1));
}

TEST_CASE("hat step doubles the graph and certifies nullity") {
  RationalMatrix l = involution_witness(InvolutionFamily::Kn, 2);
  HatStep hs = hat_step(l, complete(2));
  CHECK(are_isomorphic(hs.g_next, cycle(4)));
  CHECK(nullity(hs.h) == 2);
  CHECK(hs.m_unscaled * hs.m_unscaled ==
        RationalMatrix::identity(4).scaled(2));
  CHECK(hs.l_next * hs.l_next == RationalMatrix::identity(4));
  CHECK(conforms(hs.l_next, hs.g_next));

  // The output involution feeds straight into the next step.
  HatStep hs2 = hat_step(hs.l_next, hs.g_next);
  CHECK(hs2.g_next.order() == 8);
  CHECK(nullity(hs2.h) == 4);

  CHECK_THROWS(hat_step(RationalMatrix::ones(2), complete(2)));  // not L^2 = I
}

TEST_CASE("family certification chain") {
  struct Row {
    int n, s, order;
  };
  // null(H) = n * 2^{s-1} with order 2x that, at every required (n, s).
  for (Row r : {Row{2, 1, 4}, Row{2, 2, 8}, Row{2, 3, 16}, Row{3, 1, 6},
                Row{3, 2, 12}, Row{4, 1, 8}}) {
    CertificationReport c = certify_family(
        InvolutionFamily::Kn, r.n, r.s, SearchBudget{.max_n_exact_z = 16});
    CHECK(c.graph.order() == r.order);
    CHECK(c.m_lower == r.order / 2);
    CHECK(c.z == r.order / 2);
    CHECK(c.z_exact);
    CHECK(c.pt == 1);
    CHECK(c.m_squared_is_2i);
  }

  // P2 chain: (P2 box P2) box P2 = Q3.
  CertificationReport q3 = certify_family(InvolutionFamily::P2, 2, 2);
  CHECK(are_isomorphic(q3.graph, hypercube(3)));
  CHECK(q3.m_lower == 4);
  CHECK(q3.z == 4);
  CHECK(q3.pt == 1);

  // Prism: K3 box P2.
  CertificationReport prism = certify_family(InvolutionFamily::Kn, 3, 1);
  CHECK(are_isomorphic(prism.graph, cartesian_product(complete(3), path(2))));
  CHECK(prism.m_lower == 3);
}

TEST_CASE("witness json") {
  CertificationReport c = certify_family(InvolutionFamily::Kn, 2, 1);
  auto j = nlohmann::json::parse(witness_to_json(c));
  CHECK(j["n"] == 4);
  CHECK(j["M_lower"] == 2);
  CHECK(j["Z"] == 2);
  CHECK(j["pt"] == 1);
  CHECK(j["graph6"] == encode_graph6(c.graph));
  CHECK(j["H"].size() == 4);
  // Entries are exact rational strings; the corner blocks are the identity.
  CHECK(j["H"][0][1] == "1");
}
