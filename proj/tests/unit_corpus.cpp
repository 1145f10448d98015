#include "doctest.h"
#include "idealis/corpus.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

using namespace idealis;

namespace {

const std::vector<CorpusEntry>& corpus() {
  static std::vector<CorpusEntry> entries = load_corpus(IDEALIS_SOURCE_CORPUS_DIR);
  return entries;
}

const CorpusEntry& by_id(const std::string& id) {
  for (const CorpusEntry& e : corpus())
    if (e.id == id) return e;
  FAIL("missing corpus entry ", id);
  return corpus().front();
}

}  // namespace

TEST_CASE("the catalogue holds the expected entries in id order") {
  std::vector<std::string> ids;
  for (const CorpusEntry& e : corpus()) ids.push_back(e.id);
  CHECK(ids == std::vector<std::string>{"ex-11.2", "ex-15.2", "ex-6.2", "lemma-5.2-cex",
                                        "lemma-9.2", "remark-10.2", "thm-12.2", "thm-16.2",
                                        "thm-17.3"});
  CHECK(std::is_sorted(ids.begin(), ids.end()));
}

TEST_CASE("entries carry metadata and at least one assert") {
  for (const CorpusEntry& e : corpus()) {
    CHECK(!e.title.empty());
    CHECK(!e.path.empty());
    CHECK(std::any_of(e.script.commands.begin(), e.script.commands.end(),
                      [](const Command& c) { return c.is_assert; }));
  }
  CHECK(by_id("ex-6.2").engine == "semigroup-z");
  CHECK(by_id("ex-15.2").engine == "semigroup-q");
  for (const char* id : {"ex-11.2", "lemma-5.2-cex", "lemma-9.2", "remark-10.2", "thm-12.2",
                         "thm-16.2", "thm-17.3"})
    CHECK(by_id(id).engine == "polynomial");
}

TEST_CASE("each entry exercises the commands it was catalogued for") {
  std::map<std::string, std::set<CommandKind>> kinds;
  for (const CorpusEntry& e : corpus())
    for (const Command& c : e.script.commands) kinds[e.id].insert(c.kind);

  CHECK(kinds["thm-16.2"].count(CommandKind::BigScan));
  CHECK(kinds["thm-16.2"].count(CommandKind::MinSub));
  CHECK(kinds["thm-16.2"].count(CommandKind::Guarantees));
  CHECK(kinds["thm-12.2"].count(CommandKind::ExpEqual));
  CHECK(kinds["thm-17.3"].count(CommandKind::Reduction));
  CHECK(kinds["lemma-5.2-cex"].count(CommandKind::Reduction));
  CHECK(kinds["lemma-5.2-cex"].count(CommandKind::PowerScan));
  CHECK(kinds["lemma-9.2"].count(CommandKind::Guarantees));
  CHECK(kinds["lemma-9.2"].count(CommandKind::ExpEqual));
  CHECK(kinds["remark-10.2"].count(CommandKind::RadEqual));
  CHECK(kinds["ex-11.2"].count(CommandKind::Member));
  CHECK(kinds["ex-11.2"].count(CommandKind::RadEqual));
  CHECK(kinds["ex-11.2"].count(CommandKind::Dim));
  CHECK(kinds["ex-15.2"].count(CommandKind::RR));
  CHECK(kinds["ex-6.2"].count(CommandKind::PowerScan));
}

TEST_CASE("every corpus script runs green") {
  CorpusReport report = run_corpus(corpus(), "", ExecOptions{});
  CHECK(report.ok);
  REQUIRE(report.runs.size() == corpus().size());
  for (const CorpusRun& run : report.runs) {
    CHECK(run.report.ok);
    for (const CommandResult& r : run.report.results) {
      CHECK(!r.error.has_value());
      if (r.is_assert) CHECK(r.pass == true);
    }
  }
  std::string text = to_text(report);
  CHECK(text.find("pass  thm-16.2") != std::string::npos);
  CHECK(text.rfind("ok\n") == text.size() - 3);
}

TEST_CASE("filtering picks one entry and rejects unknown ids") {
  CorpusReport one = run_corpus(corpus(), "thm-16.2", ExecOptions{});
  REQUIRE(one.runs.size() == 1);
  CHECK(one.runs[0].entry.id == "thm-16.2");
  CHECK(one.ok);
  CHECK_THROWS_AS(run_corpus(corpus(), "thm-99.9", ExecOptions{}), Error);
  CHECK_THROWS_AS(run_corpus({}, "", ExecOptions{}), Error);
}

TEST_CASE("corpus scripts survive a print and reparse cycle") {
  for (const CorpusEntry& e : corpus()) {
    SessionScript again = parse_script(to_text(e.script));
    CHECK(again == e.script);
  }
}

TEST_CASE("corpus json carries the entry metadata") {
  CorpusReport report = run_corpus(corpus(), "ex-6.2", ExecOptions{});
  nlohmann::json j = to_json(report);
  CHECK(j.at("ok") == true);
  REQUIRE(j.at("entries").size() == 1);
  const nlohmann::json& entry = j.at("entries")[0];
  CHECK(entry.at("id") == "ex-6.2");
  CHECK(entry.at("engine") == "semigroup-z");
  CHECK(entry.contains("title"));
  CHECK(entry.contains("notes"));
  CHECK(entry.contains("path"));
  CHECK(entry.at("ring") == "sg<3,4,5> over Z");
  CHECK(entry.at("results").size() == report.runs[0].report.results.size());
}

TEST_CASE("loading rejects missing directories") {
  CHECK_THROWS_AS(load_corpus("/nonexistent/corpus/dir"), Error);
}
