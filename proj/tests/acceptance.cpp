// Copyright 2026 The qtopo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Acceptance suite: one line per criterion, non-zero exit if any fails.
//
// Criteria 1-3 and 5 go through the qtopo executable exactly as a user
// would; the rest are exhaustive property checks against the library, with
// the brute-force oracle as the reference wherever one exists.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "process.hpp"
#include "qtopo/enumeration.hpp"
#include "qtopo/negation_machine.hpp"
#include "qtopo/question_calculus.hpp"
#include "test_support.hpp"

namespace qtopo::testing {
namespace {

using Clock = std::chrono::steady_clock;

// Pinned time limits.
constexpr double kWorkedExampleSeconds = 1.0;
constexpr double kSmallEnumerationSeconds = 0.1;  // n <= 3, "milliseconds"
constexpr double kOracleFourSeconds = 60.0;
constexpr double kEnumeratorFourSeconds = 1.0;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Collects failure notes; the criterion passes when none were recorded.
class Verdict {
 public:
  void expect(bool ok, const std::string& note) {
    if (!ok) {
      ++failures_;
      if (notes_.size() < 5) notes_.push_back(note);
    }
  }
  bool passed() const { return failures_ == 0; }
  std::string summary() const {
    std::ostringstream out;
    out << failures_ << " counterexample(s)";
    for (const auto& n : notes_) out << "; " << n;
    return out.str();
  }
  void note(std::string text) { info_ = std::move(text); }
  const std::string& info() const { return info_; }

 private:
  std::size_t failures_ = 0;
  std::vector<std::string> notes_;
  std::string info_;
};

const char* kMassive =
    R"({"elements":["m","s","e"],"opens":[[],["m"],["m","s"],["m","e"],["m","s","e"]]})";

void timed_cli(Verdict& v, const std::string& args, const std::string& expected) {
  const auto start = Clock::now();
  const RunResult r = run_cli(args);
  const double took = seconds_since(start);
  v.expect(r.exit_code == 0, args + ": exit " + std::to_string(r.exit_code));
  v.expect(r.out == expected + "\n", args + ": got " + r.out);
  v.expect(took < kWorkedExampleSeconds, args + ": took " + std::to_string(took) + " s");
}

Verdict worked_example_resolution() {
  Verdict v;
  const auto file = write_temp("acceptance-massive.json", kMassive);
  timed_cli(v, "resolve " + file + " --point e",
            R"({"elements":["m","s","e"],"opens":[[],["m"],["m","s"]]})");
  timed_cli(v, "classify " + file + " --point e",
            R"({"kind":"type-1","carrier":["m","s"],"opens":[[],["m"],["m","s"]]})");
  return v;
}

Verdict worked_example_definite() {
  Verdict v;
  const auto file = write_temp("acceptance-massive.json", kMassive);
  timed_cli(v, "classify " + file + " --point m", R"({"kind":"type-2","opens":[[]]})");
  return v;
}

Verdict irrelevant_question() {
  Verdict v;
  const auto file = write_temp("acceptance-massive.json", kMassive);
  timed_cli(v, "classify " + file + " --point q", R"({"kind":"type-3","opens":[]})");
  return v;
}

Verdict enumeration_matches_oracle() {
  Verdict v;
  const std::size_t expected_counts[] = {1, 1, 4, 29, 355};
  std::ostringstream timing;
  for (unsigned n = 0; n <= 4; ++n) {
    // Oracle first.
    auto start = Clock::now();
    std::vector<SubsetFamily> expected;
    for (const auto& f : oracle::all_topologies(n)) expected.push_back(from_oracle(f));
    const double oracle_time = seconds_since(start);
    std::sort(expected.begin(), expected.end());

    start = Clock::now();
    std::vector<SubsetFamily> produced;
    enumerate_topologies(points(n), [&](const Topology& t) {
      produced.push_back(t.family());
      return true;
    });
    const double enum_time = seconds_since(start);

    const std::string tag = "n=" + std::to_string(n);
    v.expect(expected.size() == expected_counts[n],
             tag + ": oracle count " + std::to_string(expected.size()));
    v.expect(produced.size() == expected_counts[n],
             tag + ": enumerator count " + std::to_string(produced.size()));
    std::vector<SubsetFamily> sorted = produced;
    std::sort(sorted.begin(), sorted.end());
    v.expect(sorted == expected, tag + ": family sets differ");
    v.expect(std::is_sorted(produced.begin(), produced.end()), tag + ": stream not ascending");

    if (n <= 3) {
      v.expect(oracle_time < kSmallEnumerationSeconds,
               tag + ": oracle took " + std::to_string(oracle_time) + " s");
      v.expect(enum_time < kSmallEnumerationSeconds,
               tag + ": enumerator took " + std::to_string(enum_time) + " s");
    } else {
      v.expect(oracle_time < kOracleFourSeconds,
               tag + ": oracle took " + std::to_string(oracle_time) + " s");
      v.expect(enum_time < kEnumeratorFourSeconds,
               tag + ": enumerator took " + std::to_string(enum_time) + " s");
      timing << "n=4 oracle " << oracle_time << " s, enumerator " << enum_time << " s";
    }
  }
  v.note(timing.str());
  return v;
}

Verdict question_space_on_two_points() {
  Verdict v;
  const std::string expected =
      R"({"elements":["m","s"],"opens":[[],["m"],["s"],["m","s"]]})"
      "\n"
      R"({"elements":["m","s"],"opens":[[],["m"],["m","s"]]})"
      "\n"
      R"({"elements":["m","s"],"opens":[[],["s"],["m","s"]]})"
      "\n"
      R"({"elements":["m","s"],"opens":[[],["m","s"]]})"
      "\n";
  const RunResult named = run_cli("enumerate --n 2 --labels m,s");
  v.expect(named.exit_code == 0, "exit " + std::to_string(named.exit_code));
  v.expect(named.out == expected, "labelled stream: " + named.out);

  // Default labels x1, x2 stand for m, s.
  std::string renamed = run_cli("enumerate --n 2").out;
  for (auto [from, to] : {std::pair{"\"x1\"", "\"m\""}, std::pair{"\"x2\"", "\"s\""}}) {
    for (auto at = renamed.find(from); at != std::string::npos; at = renamed.find(from)) {
      renamed.replace(at, std::string(from).size(), to);
    }
  }
  v.expect(renamed == expected, "default-label stream: " + renamed);
  return v;
}

SubsetFamily packed_result(const SubsetFamily& result, Subset carrier) {
  std::vector<Subset> packed;
  for (Subset u : result) packed.push_back(pack(u, carrier));
  return SubsetFamily(std::move(packed));
}

template <typename Body>
void for_every_topology(unsigned max_n, Body body) {
  for (unsigned n = 0; n <= max_n; ++n) {
    const GroundSet g = points(n);
    for (const auto& f : oracle::all_topologies(n)) body(n, g, f, make_topology(from_oracle(f), g));
  }
}

Verdict negation_laws() {
  Verdict v;
  for_every_topology(4, [&](unsigned n, const GroundSet& g, const oracle::Family& f,
                            const Topology& t) {
    const Topology neg = negation_question(t);
    const std::string tag = g.format(g.full()) + " " + std::to_string(f.size()) + " opens";
    v.expect(is_topology(neg.family(), g) && oracle::is_topology(to_oracle(neg.family()), n),
             tag + ": negation is not a topology");
    v.expect(negation_question(neg) == t, tag + ": negation not an involution");
    const bool agree = machines_agree(t);
    const bool sigma = is_sigma_field(t.family(), g);
    const bool all_clopen = std::all_of(t.opens().begin(), t.opens().end(), [&](Subset u) {
      return t.is_open(complement(u, g));
    });
    v.expect(agree == sigma && sigma == all_clopen, tag + ": agree/sigma/clopen disagree");
    v.expect(sigma == oracle::is_sigma_field(f, n), tag + ": sigma differs from oracle");
  });
  return v;
}

Verdict resolution_trichotomy() {
  Verdict v;
  for_every_topology(4, [&](unsigned n, const GroundSet& g, const oracle::Family&,
                            const Topology& t) {
    for (unsigned x = 0; x < n; ++x) {
      const ResolutionOutcome out = classify_question(t, g.label(x));
      const std::string tag = "point " + g.label(x);
      v.expect(out.kind != QuestionKind::kTypeIII, tag + ": type III in-space");
      const bool every_open_has_x = std::all_of(
          t.opens().begin(), t.opens().end(),
          [&](Subset u) { return u.is_empty() || u.contains(x); });
      if (out.kind == QuestionKind::kTypeII) {
        v.expect(every_open_has_x, tag + ": type II with an open avoiding x");
        v.expect(out.result == SubsetFamily{Subset{}}, tag + ": type II result is not {φ}");
      } else if (out.kind == QuestionKind::kTypeI) {
        v.expect(!every_open_has_x, tag + ": type I although every open holds x");
        const Subset carrier = out.carrier.value_or(Subset{});
        v.expect(!carrier.is_empty() && !carrier.contains(x), tag + ": bad carrier");
        const SubsetFamily packed = packed_result(out.result, carrier);
        v.expect(packed == subspace_topology(t, carrier).family(),
                 tag + ": result is not the subspace topology");
        v.expect(is_topology(packed, g.restrict(carrier)),
                 tag + ": result is not a topology on the carrier");
      }
    }
    const ResolutionOutcome absent = classify_question(t, "not-a-point");
    v.expect(absent.kind == QuestionKind::kTypeIII && absent.result.empty(),
             "absent label is not type III");
  });
  return v;
}

Verdict neighborhood_laws() {
  Verdict v;
  for_every_topology(4, [&](unsigned n, const GroundSet& g, const oracle::Family& f,
                            const Topology& t) {
    for (unsigned x = 0; x < n; ++x) {
      const SubsetFamily nbhd = neighborhood_system(t, g.label(x));
      v.expect(to_oracle(nbhd) == oracle::neighborhoods(f, n, x), "differs from definition");
      v.expect(!nbhd.empty(), "empty neighborhood system");
      for (Subset a : nbhd) {
        for (Subset b : nbhd) v.expect(nbhd.contains(a & b), "not intersection-closed");
        for (Subset::Bits w = 0; w <= g.full().bits(); ++w) {
          if (a.subset_of(Subset(w))) v.expect(nbhd.contains(Subset(w)), "not superset-closed");
        }
      }
    }
  });
  return v;
}

Verdict hereditary_discreteness() {
  Verdict v;
  for (unsigned n = 2; n <= 5; ++n) {
    const GroundSet g = points(n);
    const Topology discrete = Topology::discrete(g);
    for (unsigned x = 0; x < n; ++x) {
      const ResolutionOutcome out = classify_question(discrete, g.label(x));
      const Subset rest = g.full() - Subset::singleton(x);
      v.expect(out.kind == QuestionKind::kTypeI && out.carrier == rest,
               "n=" + std::to_string(n) + ": wrong carrier");
      v.expect(packed_result(out.result, rest) == Topology::discrete(g.restrict(rest)).family(),
               "n=" + std::to_string(n) + ": remainder not discrete");
    }
    std::vector<std::string> order(g.labels().begin(), g.labels().end() - 1);
    const auto steps = resolve_sequence(discrete, order);
    v.expect(steps.size() == n - 1, "n=" + std::to_string(n) + ": wrong number of steps");
    std::size_t expected_size = n;
    for (const auto& step : steps) {
      const std::string tag = "n=" + std::to_string(n) + " step " + step.point;
      v.expect(step.ground.size() == expected_size, tag + ": unexpected ground size");
      v.expect(step.kind == QuestionKind::kTypeI && step.carrier &&
                   step.ground.size() - step.carrier->size() == 1,
               tag + ": did not eliminate exactly one assertion");
      if (step.carrier) {
        v.expect(packed_result(step.result, *step.carrier) ==
                     Topology::discrete(step.ground.restrict(*step.carrier)).family(),
                 tag + ": remainder not discrete");
      }
      --expected_size;
    }
  }
  return v;
}

Verdict parents_match_filter() {
  Verdict v;
  for (unsigned big = 0; big <= 4; ++big) {
    const GroundSet y = points(big);
    const auto candidates = oracle::all_topologies(big);
    for (Subset::Bits pick = 0; pick <= y.full().bits(); ++pick) {
      const GroundSet x = y.restrict(Subset(pick));
      for (const auto& t : all_topologies(x)) {
        oracle::Family required;
        for (Subset u : t.opens()) required.push_back(unpack(u, Subset(pick)).bits());
        std::vector<SubsetFamily> expected;
        for (const auto& c : candidates) {
          if (oracle::includes(c, required)) expected.push_back(from_oracle(c));
        }
        std::sort(expected.begin(), expected.end());
        std::vector<SubsetFamily> got;
        for (const auto& p : parent_questions(t, y)) got.push_back(p.family());
        const std::string tag = x.format(x.full()) + " in " + y.format(y.full());
        v.expect(got == expected, tag + ": differs from brute-force filter");
        if (t == Topology::discrete(x)) v.expect(!got.empty(), tag + ": no parent");
      }
    }
  }
  return v;
}

struct Criterion {
  int id;
  const char* name;
  std::function<Verdict()> run;
};

}  // namespace
}  // namespace qtopo::testing

int main() {
  using namespace qtopo::testing;
  const std::vector<Criterion> criteria = {
      {1, "worked example: resolve e gives {φ,{m},{m,s}}, type-1 on {m,s}",
       worked_example_resolution},
      {2, "worked example: classify m is type-2 with opens [[]]", worked_example_definite},
      {3, "irrelevant question: classify q is type-3 with empty opens", irrelevant_question},
      {4, "enumeration equals brute-force oracle, counts 1,1,4,29,355",
       enumeration_matches_oracle},
      {5, "enumerate --n 2 yields exactly the four questions on {m,s}",
       question_space_on_two_points},
      {6, "negation laws over every topology, n <= 4", negation_laws},
      {7, "three-way classification over every topology and point, n <= 4",
       resolution_trichotomy},
      {8, "neighborhood system laws, n <= 4", neighborhood_laws},
      {9, "hereditary discreteness, n = 2..5", hereditary_discreteness},
      {10, "parent questions equal the brute-force filter, |Y| <= 4", parents_match_filter},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v.expect(false, std::string("exception: ") + e.what());
    }
    std::cout << (v.passed() ? "[PASS] " : "[FAIL] ") << "AC" << c.id << " " << c.name;
    if (!v.passed()) std::cout << " -- " << v.summary();
    if (!v.info().empty()) std::cout << " (" << v.info() << ")";
    std::cout << "\n";
    if (!v.passed()) ++failed;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
