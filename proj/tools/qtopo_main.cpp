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

// qtopo: command-line front end over the libqtopo C API.
//
// Exit codes: 0 success, 1 domain/validation failure, 2 parse/usage error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qtopo/qtopo.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

struct QuestionDeleter {
  void operator()(qtopo_question* q) const { qtopo_question_free(q); }
};
using QuestionPtr = std::unique_ptr<qtopo_question, QuestionDeleter>;

struct StringDeleter {
  void operator()(char* s) const { qtopo_free_string(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

int exit_code_for(qtopo_status status) {
  switch (status) {
    case QTOPO_OK: return kExitOk;
    case QTOPO_ERR_PARSE:
    case QTOPO_ERR_ARGUMENT: return kExitUsage;
    case QTOPO_ERR_DOMAIN:
    case QTOPO_ERR_INTERNAL: return kExitDomain;
  }
  return kExitDomain;
}

int report_failure(qtopo_status status) {
  std::cerr << "error: " << qtopo_last_error() << "\n";
  return exit_code_for(status);
}

// Reads and parses a question file; prints the failure and returns nullopt
// with `code` set on error.
std::optional<QuestionPtr> load_question(const std::string& path, int& code) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot open '" << path << "'\n";
    code = kExitUsage;
    return std::nullopt;
  }
  std::ostringstream text;
  text << in.rdbuf();
  qtopo_question* raw = nullptr;
  const qtopo_status status = qtopo_question_parse(text.str().c_str(), &raw);
  if (status != QTOPO_OK) {
    std::cerr << "error: " << path << ": " << qtopo_last_error() << "\n";
    code = exit_code_for(status);
    return std::nullopt;
  }
  return QuestionPtr(raw);
}

// `text` is taken by reference: it is filled by the call that produced `status`.
int print_result(qtopo_status status, char*& text) {
  OwnedString owned(text);
  if (status != QTOPO_OK) return report_failure(status);
  std::cout << owned.get() << "\n";
  return kExitOk;
}

int print_line(const char* document, void* /*user*/) {
  std::cout << document << "\n";
  return 0;
}

std::vector<const char*> c_strings(const std::vector<std::string>& items) {
  std::vector<const char*> out;
  out.reserve(items.size());
  for (const auto& item : items) out.push_back(item.c_str());
  return out;
}

// Optional label list for enumeration commands; empty means default names.
const char* const* labels_or_null(const std::vector<const char*>& labels) {
  return labels.empty() ? nullptr : labels.data();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Questions as finite topologies: validate, resolve, negate, enumerate"};
  app.require_subcommand(1);

  std::string file;
  std::string point;
  std::vector<std::string> points;
  std::vector<std::string> labels;
  std::size_t n = 0;
  bool count_only = false;
  bool census = false;
  std::int64_t limit = -1;
  unsigned workers = 1;

  auto add_file = [&](CLI::App* cmd) {
    cmd->add_option("file", file, "Question document (JSON)")->required();
  };
  auto add_point = [&](CLI::App* cmd) {
    cmd->add_option("--point", point, "Element label")->required();
  };
  auto add_workers = [&](CLI::App* cmd) {
    cmd->add_option("--workers", workers, "Enumeration worker threads")
        ->check(CLI::Range(1U, 256U));
  };
  auto add_labels = [&](CLI::App* cmd) {
    cmd->add_option("--labels", labels, "Element labels (default x1..xn)")->delimiter(',');
  };

  auto* validate = app.add_subcommand("validate", "Check the topology axioms");
  add_file(validate);
  auto* classify = app.add_subcommand("classify", "Classify the question for a point");
  add_file(classify);
  add_point(classify);
  auto* resolve = app.add_subcommand("resolve", "Print T - N(x)");
  add_file(resolve);
  add_point(resolve);
  auto* sequence = app.add_subcommand("sequence", "Iterated elimination chain");
  add_file(sequence);
  sequence->add_option("--points", points, "Comma-separated labels")
      ->required()
      ->delimiter(',');
  auto* negate = app.add_subcommand("negate", "Negation question");
  add_file(negate);
  auto* clopen = app.add_subcommand("clopen", "Clopen sets");
  add_file(clopen);
  auto* agree = app.add_subcommand("agree", "Machine/anti-machine agreement");
  add_file(agree);
  auto* sigma = app.add_subcommand("sigma", "Sigma-field check on the raw family");
  add_file(sigma);
  auto* enumerate = app.add_subcommand("enumerate", "All topologies on n points");
  enumerate->add_option("--n", n, "Ground set size")->required();
  enumerate->add_flag("--count-only", count_only, "Print only the count");
  enumerate->add_flag("--census", census, "Print the classification census");
  add_labels(enumerate);
  add_workers(enumerate);
  auto* definite = app.add_subcommand("definite", "Questions with a definite answer");
  definite->add_option("--n", n, "Ground set size")->required();
  add_point(definite);
  add_labels(definite);
  add_workers(definite);
  auto* parents = app.add_subcommand("parents", "Parent questions on a superset");
  add_file(parents);
  parents->add_option("--superset", points, "Comma-separated labels")
      ->required()
      ->delimiter(',');
  parents->add_option("--limit", limit, "Stop after this many")->check(CLI::NonNegativeNumber);
  add_workers(parents);
  auto* efficiency = app.add_subcommand("efficiency", "Assertions eliminated by one step");
  add_file(efficiency);
  add_point(efficiency);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  const auto label_ptrs = c_strings(labels);
  const auto point_ptrs = c_strings(points);

  if (enumerate->parsed() || definite->parsed()) {
    if (!labels.empty() && labels.size() != n) {
      std::cerr << "error: --labels names " << labels.size() << " elements but --n is " << n
                << "\n";
      return kExitUsage;
    }
    if (enumerate->parsed()) {
      char* text = nullptr;
      if (census) {
        return print_result(qtopo_census(labels_or_null(label_ptrs), n, workers, &text), text);
      }
      if (count_only) return print_result(qtopo_count_json(n, workers, &text), text);
      const qtopo_status status =
          qtopo_enumerate(labels_or_null(label_ptrs), n, workers, print_line, nullptr);
      return status == QTOPO_OK ? kExitOk : report_failure(status);
    }
    const qtopo_status status = qtopo_definite(labels_or_null(label_ptrs), n, point.c_str(),
                                               workers, print_line, nullptr);
    return status == QTOPO_OK ? kExitOk : report_failure(status);
  }

  int code = kExitOk;
  auto question = load_question(file, code);
  if (!question) return code;
  const qtopo_question* q = question->get();
  char* text = nullptr;

  if (validate->parsed()) {
    int valid = 0;
    const qtopo_status status = qtopo_validate(q, &valid, &text);
    OwnedString owned(text);
    if (status != QTOPO_OK) return report_failure(status);
    std::cout << owned.get() << "\n";
    return valid ? kExitOk : kExitDomain;
  }
  if (classify->parsed()) return print_result(qtopo_classify(q, point.c_str(), &text), text);
  if (resolve->parsed()) return print_result(qtopo_resolve(q, point.c_str(), &text), text);
  if (sequence->parsed()) {
    return print_result(qtopo_sequence(q, point_ptrs.data(), point_ptrs.size(), &text), text);
  }
  if (negate->parsed()) return print_result(qtopo_negate(q, &text), text);
  if (clopen->parsed()) return print_result(qtopo_clopen(q, &text), text);
  if (agree->parsed()) return print_result(qtopo_agree(q, &text), text);
  if (sigma->parsed()) return print_result(qtopo_sigma(q, &text), text);
  if (efficiency->parsed()) {
    return print_result(qtopo_efficiency(q, point.c_str(), &text), text);
  }
  if (parents->parsed()) {
    const qtopo_status status = qtopo_parents(q, point_ptrs.data(), point_ptrs.size(), limit,
                                              workers, print_line, nullptr);
    return status == QTOPO_OK ? kExitOk : report_failure(status);
  }
  return kExitUsage;
}
