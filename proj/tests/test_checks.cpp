#include "doctest.h"
#include "oracles.hpp"
#include "qgr/checks.hpp"
#include "qgr/error.hpp"

using namespace qgr;

namespace {

std::string failures(const Report& rep) {
  std::string out;
  for (const auto& e : rep.entries)
    if (!e.pass) out += e.label + ": " + e.residual.substr(0, 200) + "\n";
  return out;
}

}  // namespace

TEST_CASE("relations hold and Serre residuals pair to zero") {
  for (int n : {2, 3}) {
    for (Kind k : {Kind::gl, Kind::sl}) {
      Algebra alg(n, k);
      PairingContext ctx(alg);
      const Report rep = relations_check(ctx, 4);
      INFO(failures(rep));
      CHECK(rep.pass());
      CHECK(rep.command == "relations");
      CHECK(!rep.entries.empty());
    }
  }
}

TEST_CASE("Hopf axioms on generators and random elements") {
  Algebra gl2(2, Kind::gl);
  const Report rep = hopf_axioms_check(gl2, 20, 4);
  INFO(failures(rep));
  CHECK(rep.pass());
  // Three axioms per generator plus four aggregate entries.
  CHECK(rep.entries.size() == 3 * gl2.generators().size() + 4);
  const Report again = hopf_axioms_check(gl2, 20, 4);
  REQUIRE(again.entries.size() == rep.entries.size());
  for (std::size_t k = 0; k < rep.entries.size(); ++k) CHECK(again.entries[k].label == rep.entries[k].label);
}

TEST_CASE("random elements are seeded") {
  Algebra sl3(3, Kind::sl);
  std::mt19937_64 a(9), b(9);
  for (int k = 0; k < 10; ++k) CHECK(random_element(a, sl3, 3) == random_element(b, sl3, 3));
}

TEST_CASE("pairing table against the coproduct oracle") {
  Algebra sl3(3, Kind::sl);
  PairingContext ctx(sl3);
  const auto table = pairing_table(ctx, 3);
  CHECK(!table.empty());
  for (const auto& row : table) {
    CHECK(row.value == oracle::pair_by_upper_coproduct(ctx, row.f, row.e));
    CHECK(row.f.size() == row.e.size());
  }
  const Report rep = pairing_routes_check(ctx, 3);
  INFO(failures(rep));
  CHECK(rep.pass());
}

TEST_CASE("dual bases") {
  Algebra gl3(3, Kind::gl);
  PairingContext ctx(gl3);
  for (const Content& z : contents_up_to(3, 3)) {
    const Report rep = dual_basis_check(ctx, z);
    INFO(failures(rep));
    CHECK(rep.pass());
  }
  CHECK_THROWS_AS(dual_basis_check(ctx, Content{1}), Error);
  CHECK_THROWS_AS(dual_basis_check(ctx, Content{1, -1}), Error);
}
