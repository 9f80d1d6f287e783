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

// Exercises libqtopo strictly through its C header.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <string>
#include <vector>

#include "doctest.h"
#include "qtopo/qtopo.h"

namespace {

constexpr const char* kMassive =
    R"({"elements":["m","s","e"],"opens":[[],["m"],["m","s"],["m","e"],["m","s","e"]]})";

struct Question {
  qtopo_question* handle = nullptr;
  explicit Question(const char* text) {
    REQUIRE(qtopo_question_parse(text, &handle) == QTOPO_OK);
  }
  ~Question() { qtopo_question_free(handle); }
  Question(const Question&) = delete;
  Question& operator=(const Question&) = delete;
};

std::string take(char* text) {
  std::string out = text == nullptr ? "" : text;
  qtopo_free_string(text);
  return out;
}

int collect(const char* document, void* user) {
  static_cast<std::vector<std::string>*>(user)->push_back(document);
  return 0;
}

int stop_after_two(const char* document, void* user) {
  auto* seen = static_cast<std::vector<std::string>*>(user);
  seen->push_back(document);
  return seen->size() >= 2 ? 1 : 0;
}

TEST_CASE("parse, validate and serialize") {
  Question q(kMassive);
  int valid = 0;
  char* report = nullptr;
  REQUIRE(qtopo_validate(q.handle, &valid, &report) == QTOPO_OK);
  CHECK(valid == 1);
  CHECK(take(report) == R"({"valid":true})");

  char* text = nullptr;
  REQUIRE(qtopo_question_serialize(q.handle, &text) == QTOPO_OK);
  CHECK(take(text) == kMassive);
}

TEST_CASE("classify and resolve the worked example") {
  Question q(kMassive);
  char* text = nullptr;
  REQUIRE(qtopo_classify(q.handle, "e", &text) == QTOPO_OK);
  CHECK(take(text) == R"({"kind":"type-1","carrier":["m","s"],"opens":[[],["m"],["m","s"]]})");
  REQUIRE(qtopo_classify(q.handle, "m", &text) == QTOPO_OK);
  CHECK(take(text) == R"({"kind":"type-2","opens":[[]]})");
  REQUIRE(qtopo_classify(q.handle, "q", &text) == QTOPO_OK);
  CHECK(take(text) == R"({"kind":"type-3","opens":[]})");
  REQUIRE(qtopo_resolve(q.handle, "e", &text) == QTOPO_OK);
  CHECK(take(text) == R"({"elements":["m","s","e"],"opens":[[],["m"],["m","s"]]})");
}

TEST_CASE("negation family") {
  Question q(kMassive);
  char* text = nullptr;
  REQUIRE(qtopo_negate(q.handle, &text) == QTOPO_OK);
  CHECK(take(text) ==
        R"({"elements":["m","s","e"],"opens":[[],["s"],["e"],["s","e"],["m","s","e"]]})");
  REQUIRE(qtopo_clopen(q.handle, &text) == QTOPO_OK);
  CHECK(take(text) == R"({"elements":["m","s","e"],"opens":[[],["m","s","e"]]})");
  REQUIRE(qtopo_sigma(q.handle, &text) == QTOPO_OK);
  CHECK(take(text) == R"({"sigma_field":false})");
  REQUIRE(qtopo_agree(q.handle, &text) == QTOPO_OK);
  CHECK(take(text).rfind(R"({"agree":false,"sigma_field":false,)", 0) == 0);
}

TEST_CASE("sequence and efficiency") {
  Question q(kMassive);
  const char* order[] = {"m"};
  char* text = nullptr;
  REQUIRE(qtopo_sequence(q.handle, order, 1, &text) == QTOPO_OK);
  CHECK(take(text) ==
        R"({"steps":[{"point":"m","elements":["m","s","e"],"kind":"type-2","opens":[[]],"eliminated":3}]})");
  REQUIRE(qtopo_efficiency(q.handle, "e", &text) == QTOPO_OK);
  CHECK(take(text) == R"({"point":"e","kind":"type-1","eliminated":1})");

  const char* repeated[] = {"m", "m"};
  CHECK(qtopo_sequence(q.handle, repeated, 2, &text) == QTOPO_ERR_PARSE);
}

TEST_CASE("streaming enumeration") {
  std::vector<std::string> seen;
  const char* labels[] = {"m", "s"};
  REQUIRE(qtopo_enumerate(labels, 2, 1, collect, &seen) == QTOPO_OK);
  REQUIRE(seen.size() == 4);
  CHECK(seen[0] == R"({"elements":["m","s"],"opens":[[],["m"],["s"],["m","s"]]})");
  CHECK(seen[3] == R"({"elements":["m","s"],"opens":[[],["m","s"]]})");

  std::vector<std::string> defaults;
  REQUIRE(qtopo_enumerate(nullptr, 1, 1, collect, &defaults) == QTOPO_OK);
  REQUIRE(defaults.size() == 1);
  CHECK(defaults[0] == R"({"elements":["x1"],"opens":[[],["x1"]]})");

  std::vector<std::string> early;
  REQUIRE(qtopo_enumerate(nullptr, 4, 3, stop_after_two, &early) == QTOPO_OK);
  CHECK(early.size() == 2);

  uint64_t count = 0;
  REQUIRE(qtopo_count(4, 2, &count) == QTOPO_OK);
  CHECK(count == 355);
  char* text = nullptr;
  REQUIRE(qtopo_count_json(3, 1, &text) == QTOPO_OK);
  CHECK(take(text) == R"({"n":3,"count":29})");
  REQUIRE(qtopo_census(labels, 2, 1, &text) == QTOPO_OK);
  CHECK(take(text) ==
        R"({"n":2,"count":4,"census":[{"point":"m","type-1":2,"type-2":2},)"
        R"({"point":"s","type-1":2,"type-2":2}],"self_dual_count":2})");
}

TEST_CASE("definite and parents") {
  std::vector<std::string> definite;
  const char* labels[] = {"m", "s"};
  REQUIRE(qtopo_definite(labels, 2, "m", 1, collect, &definite) == QTOPO_OK);
  REQUIRE(definite.size() == 2);
  CHECK(definite[0] == R"({"elements":["m","s"],"opens":[[],["m"],["m","s"]]})");

  Question point(R"({"elements":["m"],"opens":[[],["m"]]})");
  std::vector<std::string> parents;
  REQUIRE(qtopo_parents(point.handle, labels, 2, -1, 1, collect, &parents) == QTOPO_OK);
  REQUIRE(parents.size() == 2);
  CHECK(parents[0] == R"({"elements":["m","s"],"opens":[[],["m"],["s"],["m","s"]]})");
  CHECK(parents[1] == R"({"elements":["m","s"],"opens":[[],["m"],["m","s"]]})");

  std::vector<std::string> limited;
  REQUIRE(qtopo_parents(point.handle, labels, 2, 1, 1, collect, &limited) == QTOPO_OK);
  CHECK(limited.size() == 1);

  const char* unrelated[] = {"s", "e"};
  CHECK(qtopo_parents(point.handle, unrelated, 2, -1, 1, collect, &limited) ==
        QTOPO_ERR_ARGUMENT);
  CHECK(std::string(qtopo_last_error()).find("'m'") != std::string::npos);
}

TEST_CASE("error statuses") {
  qtopo_question* handle = nullptr;
  CHECK(qtopo_question_parse("{", &handle) == QTOPO_ERR_PARSE);
  CHECK(handle == nullptr);
  CHECK(std::string(qtopo_last_error()).find("invalid JSON") != std::string::npos);
  CHECK(qtopo_question_parse(R"({"elements":["m","m"],"opens":[]})", &handle) ==
        QTOPO_ERR_PARSE);
  CHECK(qtopo_question_parse(nullptr, &handle) == QTOPO_ERR_ARGUMENT);

  Question broken(R"({"elements":["m","s"],"opens":[[],["m"]]})");
  int valid = 1;
  char* text = nullptr;
  REQUIRE(qtopo_validate(broken.handle, &valid, &text) == QTOPO_OK);
  CHECK(valid == 0);
  CHECK(take(text).find(R"("axiom":"C1")") != std::string::npos);
  CHECK(qtopo_classify(broken.handle, "m", &text) == QTOPO_ERR_DOMAIN);
  CHECK(std::string(qtopo_last_error()).find("C1") != std::string::npos);
  // sigma works on any family.
  REQUIRE(qtopo_sigma(broken.handle, &text) == QTOPO_OK);
  CHECK(take(text) == R"({"sigma_field":false})");

  uint64_t count = 0;
  CHECK(qtopo_count(6, 1, &count) == QTOPO_ERR_ARGUMENT);
  std::vector<std::string> sink;
  CHECK(qtopo_definite(nullptr, 2, "q", 1, collect, &sink) == QTOPO_ERR_ARGUMENT);
  const char* dup[] = {"a", "a"};
  CHECK(qtopo_enumerate(dup, 2, 1, collect, &sink) == QTOPO_ERR_ARGUMENT);
  CHECK(qtopo_enumerate(nullptr, 2, 1, nullptr, nullptr) == QTOPO_ERR_ARGUMENT);
}

}  // namespace
