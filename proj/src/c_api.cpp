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

#include "qtopo/qtopo.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <string>
#include <vector>

#include "qtopo/wire_format.hpp"

struct qtopo_question {
  qtopo::QuestionDocument document;
};

namespace {

thread_local std::string last_error;

qtopo_status status_for(qtopo::ErrorCode code) {
  using qtopo::ErrorCode;
  switch (code) {
    case ErrorCode::kAxiomViolation:
      return QTOPO_ERR_DOMAIN;
    case ErrorCode::kMalformedDocument:
    case ErrorCode::kDuplicateLabel:
    case ErrorCode::kEmptyLabel:
    case ErrorCode::kTooManyElements:
      return QTOPO_ERR_PARSE;
    case ErrorCode::kUnknownLabel:
    case ErrorCode::kOutOfGround:
    case ErrorCode::kSizeLimit:
    case ErrorCode::kLabelMismatch:
      return QTOPO_ERR_ARGUMENT;
  }
  return QTOPO_ERR_INTERNAL;
}

qtopo_status fail(qtopo_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

// Runs `body`, translating exceptions into status codes.
template <typename Body>
qtopo_status guarded(Body&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const qtopo::Error& e) {
    return fail(status_for(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(QTOPO_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(QTOPO_ERR_INTERNAL, e.what());
  }
}

char* duplicate(const std::string& text) {
  char* out = static_cast<char*>(std::malloc(text.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

qtopo_status emit_string(const std::string& text, char** out) {
  *out = duplicate(text);
  return QTOPO_OK;
}

qtopo::Topology topology_of(const qtopo_question* question) {
  return qtopo::make_topology(question->document.family, question->document.ground);
}

std::vector<std::string> collect_labels(const char* const* labels, size_t count) {
  std::vector<std::string> out;
  out.reserve(count);
  for (size_t i = 0; i < count; ++i) {
    if (labels[i] == nullptr) {
      throw qtopo::Error(qtopo::ErrorCode::kUnknownLabel, "null label");
    }
    out.emplace_back(labels[i]);
  }
  return out;
}

qtopo::GroundSet enumeration_ground(const char* const* labels, size_t n) {
  if (n > qtopo::kMaxEnumerationSize) {
    throw qtopo::Error(qtopo::ErrorCode::kSizeLimit,
                       "enumeration supports ground sets of at most " +
                           std::to_string(qtopo::kMaxEnumerationSize) + " elements");
  }
  std::vector<std::string> names;
  if (labels == nullptr) {
    for (size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  } else {
    names = collect_labels(labels, n);
  }
  try {
    return qtopo::make_ground_set(std::move(names));
  } catch (const qtopo::Error& e) {
    // Bad --labels is a usage problem, not a document problem.
    throw qtopo::Error(qtopo::ErrorCode::kLabelMismatch, e.what());
  }
}

qtopo::TopologyVisitor to_visitor(qtopo_sink sink, void* user) {
  return [sink, user](const qtopo::Topology& t) {
    const std::string text = qtopo::serialize_question(t);
    return sink(text.c_str(), user) == 0;
  };
}

#define QTOPO_REQUIRE(cond)                                                   \
  do {                                                                        \
    if (!(cond)) return fail(QTOPO_ERR_ARGUMENT, "null argument: " #cond);    \
  } while (0)

}  // namespace

extern "C" {

const char* qtopo_last_error(void) { return last_error.c_str(); }

void qtopo_free_string(char* text) { std::free(text); }

qtopo_status qtopo_question_parse(const char* text, qtopo_question** out) {
  QTOPO_REQUIRE(text != nullptr && out != nullptr);
  return guarded([&] {
    *out = new qtopo_question{qtopo::parse_question(text)};
    return QTOPO_OK;
  });
}

void qtopo_question_free(qtopo_question* question) { delete question; }

qtopo_status qtopo_question_serialize(const qtopo_question* question, char** out) {
  QTOPO_REQUIRE(question != nullptr && out != nullptr);
  return guarded([&] {
    return emit_string(
        qtopo::serialize_question(question->document.ground, question->document.family),
        out);
  });
}

qtopo_status qtopo_validate(const qtopo_question* question, int* valid, char** report) {
  QTOPO_REQUIRE(question != nullptr && valid != nullptr && report != nullptr);
  return guarded([&] {
    const auto& doc = question->document;
    const qtopo::TopologyCheck check = qtopo::check_topology(doc.family, doc.ground);
    *valid = check.valid() ? 1 : 0;
    return emit_string(qtopo::serialize_check(check, doc.ground), report);
  });
}

qtopo_status qtopo_classify(const qtopo_question* question, const char* point, char** out) {
  QTOPO_REQUIRE(question != nullptr && point != nullptr && out != nullptr);
  return guarded([&] {
    const qtopo::Topology t = topology_of(question);
    return emit_string(
        qtopo::serialize_outcome(qtopo::classify_question(t, point), t.ground()), out);
  });
}

qtopo_status qtopo_resolve(const qtopo_question* question, const char* point, char** out) {
  QTOPO_REQUIRE(question != nullptr && point != nullptr && out != nullptr);
  return guarded([&] {
    const qtopo::Topology t = topology_of(question);
    return emit_string(
        qtopo::serialize_question(t.ground(), qtopo::resolve_issue(t, point)), out);
  });
}

qtopo_status qtopo_sequence(const qtopo_question* question, const char* const* points,
                            size_t count, char** out) {
  QTOPO_REQUIRE(question != nullptr && out != nullptr);
  QTOPO_REQUIRE(points != nullptr || count == 0);
  return guarded([&] {
    const qtopo::Topology t = topology_of(question);
    const auto order = collect_labels(points, count);
    return emit_string(qtopo::serialize_sequence(qtopo::resolve_sequence(t, order)), out);
  });
}

qtopo_status qtopo_negate(const qtopo_question* question, char** out) {
  QTOPO_REQUIRE(question != nullptr && out != nullptr);
  return guarded([&] {
    return emit_string(
        qtopo::serialize_question(qtopo::negation_question(topology_of(question))), out);
  });
}

qtopo_status qtopo_clopen(const qtopo_question* question, char** out) {
  QTOPO_REQUIRE(question != nullptr && out != nullptr);
  return guarded([&] {
    const qtopo::Topology t = topology_of(question);
    return emit_string(qtopo::serialize_question(t.ground(), qtopo::clopen_sets(t)), out);
  });
}

qtopo_status qtopo_agree(const qtopo_question* question, char** out) {
  QTOPO_REQUIRE(question != nullptr && out != nullptr);
  return guarded([&] {
    return emit_string(qtopo::serialize_agreement(topology_of(question)), out);
  });
}

qtopo_status qtopo_efficiency(const qtopo_question* question, const char* point,
                              char** out) {
  QTOPO_REQUIRE(question != nullptr && point != nullptr && out != nullptr);
  return guarded([&] {
    return emit_string(qtopo::serialize_efficiency(topology_of(question), point), out);
  });
}

qtopo_status qtopo_sigma(const qtopo_question* question, char** out) {
  QTOPO_REQUIRE(question != nullptr && out != nullptr);
  return guarded([&] {
    const auto& doc = question->document;
    return emit_string(qtopo::serialize_sigma(doc.family, doc.ground), out);
  });
}

qtopo_status qtopo_parents(const qtopo_question* question, const char* const* superset,
                           size_t count, int64_t limit, unsigned workers, qtopo_sink sink,
                           void* user) {
  QTOPO_REQUIRE(question != nullptr && sink != nullptr);
  QTOPO_REQUIRE(superset != nullptr || count == 0);
  return guarded([&] {
    const qtopo::Topology t = topology_of(question);
    const qtopo::GroundSet big = enumeration_ground(superset, count);
    std::optional<std::size_t> cap;
    if (limit >= 0) cap = static_cast<std::size_t>(limit);
    qtopo::parent_questions(t, big, cap, to_visitor(sink, user), {workers});
    return QTOPO_OK;
  });
}

qtopo_status qtopo_enumerate(const char* const* labels, size_t n, unsigned workers,
                             qtopo_sink sink, void* user) {
  QTOPO_REQUIRE(sink != nullptr);
  return guarded([&] {
    qtopo::enumerate_topologies(enumeration_ground(labels, n), to_visitor(sink, user),
                                {workers});
    return QTOPO_OK;
  });
}

qtopo_status qtopo_count(size_t n, unsigned workers, uint64_t* count) {
  QTOPO_REQUIRE(count != nullptr);
  return guarded([&] {
    *count = qtopo::count_topologies(n, {workers});
    return QTOPO_OK;
  });
}

qtopo_status qtopo_count_json(size_t n, unsigned workers, char** out) {
  QTOPO_REQUIRE(out != nullptr);
  return guarded([&] {
    return emit_string(qtopo::serialize_count(n, qtopo::count_topologies(n, {workers})),
                       out);
  });
}

qtopo_status qtopo_census(const char* const* labels, size_t n, unsigned workers,
                          char** out) {
  QTOPO_REQUIRE(out != nullptr);
  return guarded([&] {
    return emit_string(qtopo::serialize_report(qtopo::enumeration_report(
                           enumeration_ground(labels, n), {workers})),
                       out);
  });
}

qtopo_status qtopo_definite(const char* const* labels, size_t n, const char* point,
                            unsigned workers, qtopo_sink sink, void* user) {
  QTOPO_REQUIRE(point != nullptr && sink != nullptr);
  return guarded([&] {
    qtopo::find_definite_questions(enumeration_ground(labels, n), point,
                                   to_visitor(sink, user), {workers});
    return QTOPO_OK;
  });
}

}  // extern "C"
