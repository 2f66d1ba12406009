#include <doctest.h>

#include <algorithm>

#include "domroots/verify.hpp"

using namespace domroots;

namespace {

const CheckResult* find(const std::vector<CheckResult>& v, const std::string& prefix) {
  auto it = std::find_if(v.begin(), v.end(), [&](const CheckResult& c) { return c.name.rfind(prefix, 0) == 0; });
  return it == v.end() ? nullptr : &*it;
}

}  // namespace

TEST_CASE("scope parsing") {
  CHECK(parse_scope("all") == VerifyScope::All);
  CHECK(parse_scope("limits") == VerifyScope::Limits);
  CHECK_FALSE(parse_scope("everything").has_value());
}

TEST_CASE("formatting") {
  CHECK(format_check({"x", CheckStatus::Pass, ""}) == "x — PASS");
  CHECK(format_check({"x", CheckStatus::Reported, "why"}) == "x — REPORTED\n    why");
  CHECK_FALSE(any_failed({{"a", CheckStatus::Reported, ""}, {"b", CheckStatus::Pass, ""}}));
  CHECK(any_failed({{"a", CheckStatus::Fail, ""}}));
}

TEST_CASE("friendship and limits scopes") {
  const auto f = run_verify(VerifyScope::Friendship);
  CHECK_FALSE(any_failed(f));
  const CheckResult* sturm = find(f, "Sturm count n=2..20 even: 3 distinct real roots");
  REQUIRE(sturm);
  CHECK(sturm->status == CheckStatus::Pass);

  const auto l = run_verify(VerifyScope::Limits);
  const CheckResult* m3 = find(l, "real-axis point −3 dominance margin");
  REQUIRE(m3);
  CHECK(m3->status == CheckStatus::Reported);
  CHECK_FALSE(any_failed(l));
}
