#include <gtest/gtest.h>

#include "majdet/errors.hpp"
#include "majdet/verify.hpp"

using namespace majdet;

namespace {

VerificationReport run(Identity id, int n, int m = 1, std::optional<CompareMode> mode = std::nullopt) {
  VerifyParams p;
  p.identity = id;
  p.n = n;
  p.m = m;
  p.mode = mode;
  return verify(p);
}

}  // namespace

TEST(Verify, NamesRoundTrip) {
  for (Identity id : all_identities()) EXPECT_EQ(parse_identity(identity_name(id)), id);
  EXPECT_EQ(parse_identity("maj-col"), Identity::maj_col);
  EXPECT_EQ(parse_identity("signed-majB"), Identity::signed_majB);
  EXPECT_EQ(parse_identity("nope"), std::nullopt);
  EXPECT_EQ(all_identities().size(), 11u);
}

TEST(Verify, SmallCasesPass) {
  for (int n = 1; n <= 4; ++n) EXPECT_TRUE(run(Identity::maj, n).pass) << n;
  EXPECT_TRUE(run(Identity::fmaj, 2, 2).pass);
  EXPECT_TRUE(run(Identity::maj_col, 2, 2).pass);
  EXPECT_TRUE(run(Identity::amaj, 2, 2).pass);
  for (Identity id : {Identity::signed_general, Identity::signed_nneg, Identity::signed_majB, Identity::signed_sneg}) {
    EXPECT_TRUE(run(id, 2).pass) << identity_name(id);
  }
  for (int n = 3; n <= 5; ++n) EXPECT_TRUE(run(Identity::dihedral, n).pass) << n;
  for (int n = 1; n <= 5; ++n) EXPECT_TRUE(run(Identity::defining, n).pass) << n;
  for (int n = 1; n <= 4; ++n) EXPECT_TRUE(run(Identity::irrep, n).pass) << n;
}

TEST(Verify, ModeSelection) {
  EXPECT_EQ(run(Identity::maj, 4).mode, CompareMode::symbolic);
  const auto big = run(Identity::maj, 5);
  EXPECT_EQ(big.mode, CompareMode::modular);
  EXPECT_TRUE(big.pass);
  EXPECT_EQ(big.prime, kDefaultPrime);
  EXPECT_EQ(big.points, 7);
  EXPECT_EQ(big.seed, 0u);
  const auto forced = run(Identity::maj, 3, 1, CompareMode::modular);
  EXPECT_EQ(forced.mode, CompareMode::modular);
  EXPECT_TRUE(forced.pass);
  EXPECT_THROW(run(Identity::maj, 5, 1, CompareMode::symbolic), InvalidArgument);
}

TEST(Verify, SymbolicReport) {
  const auto r = run(Identity::maj, 3);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.rhs, "(1-q^2)^3*(1-q^3)^4");
  ASSERT_TRUE(r.lhs.has_value());
  EXPECT_FALSE(r.mismatch.has_value());
  EXPECT_FALSE(r.prime.has_value());
}

TEST(Verify, IrrepWithPartition) {
  for (const char* text : {"2,2", "3,1", "4", "4,1", "3"}) {
    VerifyParams p;
    p.identity = Identity::irrep;
    p.lambda = parse_partition(text);
    p.n = size_of(*p.lambda);
    EXPECT_TRUE(verify(p).pass) << text;
  }
  VerifyParams p;
  p.identity = Identity::irrep;
  p.n = 5;
  p.lambda = Partition{3, 2};
  EXPECT_THROW(verify(p), InvalidArgument);  // no closed form
  p.n = 4;
  p.lambda = Partition{2, 2, 1};
  EXPECT_THROW(verify(p), InvalidArgument);  // wrong size
}

TEST(Verify, RejectsBadParameters) {
  EXPECT_THROW(run(Identity::maj, 0), InvalidArgument);
  EXPECT_THROW(run(Identity::fmaj, 2, 0), InvalidArgument);
  EXPECT_THROW(run(Identity::dihedral, 2), InvalidArgument);
  EXPECT_THROW(run(Identity::maj, 9), InvalidArgument);
  EXPECT_THROW(run(Identity::defining, 9), InvalidArgument);
  VerifyParams p;
  p.lambda = Partition{2, 1};
  p.n = 3;
  EXPECT_THROW(verify(p), InvalidArgument);
  VerifyParams composite;
  composite.modular.prime = 1'000'000;
  EXPECT_THROW(verify(composite), InvalidArgument);
  VerifyParams none;
  none.modular.points = 0;
  EXPECT_THROW(verify(none), InvalidArgument);
}

TEST(Verify, JsonIsDeterministicWithoutTiming) {
  VerifyParams p;
  p.identity = Identity::signed_general;
  p.n = 3;
  p.modular.seed = 42;
  const auto a = to_json(verify(p), false);
  const auto b = to_json(verify(p), false);
  EXPECT_EQ(a, b);
  EXPECT_FALSE(a.contains("elapsed_ms"));
  EXPECT_EQ(a["identity"], "signed");
  EXPECT_EQ(a["mode"], "modular");
  EXPECT_EQ(a["seed"], 42);
  EXPECT_TRUE(a["pass"].get<bool>());
  EXPECT_TRUE(to_json(verify(p)).contains("elapsed_ms"));
}

TEST(Verify, SerialMatchesParallel) {
  VerifyParams p;
  p.identity = Identity::fmaj;
  p.n = 3;
  p.m = 2;
  const auto par = to_json(verify(p), false);
  p.exec = Execution::serial;
  EXPECT_EQ(to_json(verify(p), false), par);
}
