#include "kemeny/verify.hpp"

#include "gtest/gtest.h"
#include "kemeny/errors.hpp"

namespace kemeny::verify {
namespace {

TEST(Check, KeepsFirstFailures) {
  Check c("x");
  for (int i = 0; i < 10; ++i) c.record(i % 2 == 0, [i] { return std::to_string(i); });
  EXPECT_EQ(c.total, 10u);
  EXPECT_EQ(c.passed, 5u);
  EXPECT_FALSE(c.ok());
  ASSERT_EQ(c.failures.size(), kMaxListedFailures);
  EXPECT_EQ(c.failures.front(), "1");
  const Json j = check_json(c);
  EXPECT_EQ(j["name"], "x");
  EXPECT_EQ(j["ok"], false);
}

TEST(Suites, SmallRunsPass) {
  const VerifyConfig cfg{3, 11};
  for (const std::string& suite : {"closed-forms", "separation", "trees", "braess"}) {
    bool ok = false;
    const Json j = run_verify(suite, cfg, ok);
    EXPECT_TRUE(ok) << j.dump(2);
    EXPECT_EQ(j["failed_checks"], 0);
    EXPECT_GT(j["checks"].get<std::size_t>(), 0u);
  }
}

TEST(Suites, Deterministic) {
  bool ok = false;
  const std::string a = run_verify("trees", VerifyConfig{3, 4}, ok).dump();
  const std::string b = run_verify("trees", VerifyConfig{3, 4}, ok).dump();
  EXPECT_EQ(a, b);
}

TEST(Suites, RejectsBadInput) {
  bool ok = false;
  EXPECT_THROW(run_verify("trees", VerifyConfig{9, 0}, ok), CapExceeded);
  EXPECT_THROW(run_verify("trees", VerifyConfig{1, 0}, ok), CapExceeded);
  EXPECT_THROW(run_verify("nope", VerifyConfig{3, 0}, ok), GraphError);
}

TEST(Corpus, RootedLookup) {
  const RootedCorpus c = rooted_class_corpus(4);
  EXPECT_EQ(c.size(), 1u + 2 + 6 + 24);
  const Graph p4(4, {{3, 1}, {1, 0}, {0, 2}});
  const std::size_t end = c.lookup(p4, 3);
  EXPECT_EQ(rooted_canonical_key(c.items[end].first, c.items[end].second), rooted_canonical_key(make_path(4), 0));
  EXPECT_THROW(c.lookup(make_path(5), 0), ConsistencyError);
}

}  // namespace
}  // namespace kemeny::verify
