// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <deque>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "commalg/errors.hpp"
#include "commalg/registry.hpp"
#include "commalg/suite.hpp"

using namespace commalg;
using nlohmann::json;

namespace {

class Checker {
 public:
  explicit Checker(const Registry& reg) : reg_(reg) {}

  const VerificationReport& entry(const std::string& id) {
    reports_.push_back(run_entry(reg_.find(id), RunConfig{}));
    const VerificationReport& r = reports_.back();
    if (!r.ok()) {
      for (const auto& c : r.claims()) {
        if (c.status == ClaimStatus::Fail) fail(id + ": " + c.id + " computed " + c.computed.dump());
      }
    }
    return r;
  }

  void expect(const VerificationReport& r, const std::string& id, const json& value) {
    const Claim* c = r.find(id);
    if (c == nullptr) {
      fail(r.subject() + ": no claim " + id);
    } else if (c->computed != value) {
      fail(id + " = " + c->computed.dump() + ", want " + value.dump());
    }
  }

  void expect_status(const VerificationReport& r, const std::string& id, ClaimStatus s) {
    const Claim* c = r.find(id);
    if (c == nullptr || c->status != s) fail(id + " has status " + (c ? to_string(c->status) : "missing"));
  }

  void fail(std::string why) { failures_.push_back(std::move(why)); }
  const std::vector<std::string>& failures() const { return failures_; }

 private:
  const Registry& reg_;
  std::deque<VerificationReport> reports_;  // stable references
  std::vector<std::string> failures_;
};

struct Criterion {
  int number;
  std::string title;
  double seconds;  // 0 when there is no time limit
  std::function<void(Checker&)> body;
};

std::vector<Criterion> criteria() {
  return {
      {1, "n=6 family with three 4-subsets", 5.0,
       [](Checker& c) {
         const auto& r = c.entry("depth1-n6m4");
         c.expect(r, "I_equals_m", true);
         c.expect(r, "ht_I", 2);
         c.expect(r, "dim_A", 2);
         c.expect(r, "depth_A", 1);
         c.expect(r, "depth_A.links", 1);
         c.expect(r, "cokernel_length", 2);
         c.expect(r, "cokernel_socle_dim", 2);
         c.expect(r, "max_ideal_kills_cokernel", true);
         c.expect(r, "conductor_generated_by_parameters", true);
       }},
      {2, "three disjoint planes in 6 variables", 10.0,
       [](Checker& c) {
         const auto& r = c.entry("depth2-l3m2");
         c.expect(r, "dim_A", 4);
         c.expect(r, "depth_A", 2);
         c.expect(r, "ht_I", 2);
         for (int i = 1; i <= 3; ++i) c.expect(r, "depth_A_over_I_plus_p" + std::to_string(i), 1);
         c.expect(r, "depth_B_over_I", 1);
       }},
      {3, "chain of three 4-subsets in 8 variables", 60.0,
       [](Checker& c) {
         const auto& r = c.entry("depth3-q3m4");
         c.expect(r, "depth_A", 3);
         c.expect(r, "dim_A", 4);
         c.expect(r, "ht_I", 2);
         c.expect(r, "depth_A_over_I", 1);
       }},
      {4, "two planes meeting in a point: powers of m are trace ideals", 0,
       [](Checker& c) {
         const auto& r = c.entry("two-planes");
         c.expect(r, "I_equals_m", true);
         for (int k = 1; k <= 3; ++k) {
           c.expect(r, "trace_m^" + std::to_string(k), true);
           c.expect(r, "endo_ring_m^" + std::to_string(k) + "_is_B", true);
         }
       }},
      {5, "fiber products over S/q, colength two, and a type-two control", 0,
       [](Checker& c) {
         for (const char* id : {"fiber-q-x1sq-d2", "fiber-q-x1sq-d3"}) {
           const auto& r = c.entry(id);
           c.expect(r, "conductor_equals_qB", true);
           c.expect(r, "cokernel_length", 2);
           c.expect(r, "socle_type_T", 1);
           c.expect(r, "type_B_over_A", 1);
           c.expect(r, "qB_generated_by_alphas", true);
           c.expect_status(r, "rees_gorenstein", ClaimStatus::Implied);
         }
         for (const char* id : {"kq-x1sq-d2", "kq-x1sq-d3"}) {
           const auto& r = c.entry(id);
           c.expect(r, "length_S_over_q", 2);
           c.expect(r, "socle_type", 1);
         }
         const auto& neg = c.entry("fiber-q-x1x2sq-d2");
         c.expect(neg, "socle_type_T", 2);
         c.expect(neg, "hypothesis_r_equals_1", false);
         c.expect_status(neg, "rees_gorenstein", ClaimStatus::NotImplied);
       }},
      {6, "t^2+t^3, t^4, t^6 in characteristic 2 and 0", 0,
       [](Checker& c) {
         const auto& f2 = c.entry("subalgebra-t2t3-char2");
         c.expect(f2, "contains_t^7", true);
         c.expect(f2, "has_value_3", false);
         c.expect(f2, "has_value_5", false);
         c.expect_status(f2, "conductor_exponent.semigroup", ClaimStatus::Pass);
         const auto& q = c.entry("subalgebra-t2t3-q");
         c.expect(q, "value_semigroup", json::array({2, 5}));
         c.expect(q, "contains_t^3", false);
         c.expect(q, "has_value_3", false);
         c.expect_status(q, "conductor_exponent.semigroup", ClaimStatus::Pass);
       }},
      {7, "H = <3,4> and its cone extension", 0,
       [](Checker& c) {
         const auto& h = c.entry("semigroup-3-4");
         c.expect(h, "symmetric", true);
         c.expect(h, "symmetric.direct", true);
         c.expect(h, "conductor", 6);
         const auto& cone = c.entry("cone-t3t4");
         c.expect(cone, "conductor_exponent", 6);
         c.expect(cone, "conductor_equals_c_plus_sB", true);
       }},
      {8, "property suites, seed 0, 200 trials each", 0,
       [](Checker& c) {
         const VerificationReport r = run_suite(RunConfig{});
         for (const char* id : {"complement_sum_identity.passed", "conductor_two_paths.passed",
                                "auslander_buchsbaum.passed", "s2_membership_oracle.passed"}) {
           c.expect(r, id, 200);
         }
       }},
      {9, "6-vertex projective plane over Q and F_2", 0,
       [](Checker& c) {
         const auto& r = c.entry("projective-plane");
         c.expect(r, "depth[q]", 3);
         c.expect(r, "depth[fp:2]", 2);
         c.expect(r, "depth_links[q]", 3);
         c.expect(r, "depth_links[fp:2]", 2);
       }},
  };
}

}  // namespace

int main(int argc, char** argv) {
  const std::string path = argc > 1 ? argv[1] : COMMALG_TEST_REGISTRY;
  std::optional<Registry> reg;
  try {
    reg = Registry::load(path);
  } catch (const Error& e) {
    std::printf("cannot load registry: %s\n", e.what());
    return 2;
  }

  bool all = true;
  for (const Criterion& cr : criteria()) {
    Checker c(*reg);
    const auto start = std::chrono::steady_clock::now();
    try {
      cr.body(c);
    } catch (const std::exception& e) {
      c.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (cr.seconds > 0 && secs >= cr.seconds) c.fail("took " + std::to_string(secs) + " s");
    const bool ok = c.failures().empty();
    all = all && ok;
    std::printf("%s %d  %-62s %8.3f s\n", ok ? "PASS" : "FAIL", cr.number, cr.title.c_str(), secs);
    for (const auto& f : c.failures()) std::printf("       %s\n", f.c_str());
  }
  return all ? 0 : 1;
}
