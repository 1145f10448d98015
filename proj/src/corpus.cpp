#include "idealis/corpus.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

namespace idealis {

namespace {

namespace fs = std::filesystem;

// header lines look like `# id: ex-6.2`; the header ends at the first line
// that is not a key-value comment
void parse_header(const std::string& source, CorpusEntry& entry) {
  std::istringstream in(source);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] != '#') break;
    size_t colon = line.find(':');
    if (colon == std::string::npos) break;
    std::string key = line.substr(1, colon - 1);
    std::string value = line.substr(colon + 1);
    auto trim = [](std::string& s) {
      s.erase(0, s.find_first_not_of(" \t"));
      s.erase(s.find_last_not_of(" \t") + 1);
    };
    trim(key);
    trim(value);
    if (key == "id")
      entry.id = value;
    else if (key == "title")
      entry.title = value;
    else if (key == "notes")
      entry.notes = entry.notes.empty() ? value : entry.notes + " " + value;
    // unknown keys are ignored so scripts can carry free-form comments
  }
}

std::string engine_name(EngineKind k) {
  switch (k) {
    case EngineKind::Polynomial: return "polynomial";
    case EngineKind::SemigroupQ: return "semigroup-q";
    case EngineKind::SemigroupZ: return "semigroup-z";
  }
  return "?";
}

}  // namespace

std::vector<CorpusEntry> load_corpus(const std::string& dir) {
  if (!fs::is_directory(dir)) throw Error("corpus directory not found: " + dir);
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ".idl") files.push_back(e.path());
  std::sort(files.begin(), files.end());

  std::vector<CorpusEntry> entries;
  std::set<std::string> seen;
  for (const fs::path& p : files) {
    std::ifstream in(p);
    if (!in) throw Error("cannot read " + p.string());
    std::stringstream buf;
    buf << in.rdbuf();
    CorpusEntry entry;
    entry.path = p.string();
    parse_header(buf.str(), entry);
    if (entry.id.empty()) throw Error(p.string() + ": missing '# id:' header");
    if (!seen.insert(entry.id).second) throw Error("duplicate corpus id " + entry.id);
    try {
      entry.script = parse_script(buf.str());
    } catch (const ParseError& e) {
      throw Error(p.string() + ": " + e.what());
    }
    entry.engine = engine_name(entry.script.ring.engine);
    bool has_assert = std::any_of(entry.script.commands.begin(), entry.script.commands.end(),
                                  [](const Command& c) { return c.is_assert; });
    if (!has_assert) throw Error(entry.id + ": corpus scripts need at least one assert");
    entries.push_back(std::move(entry));
  }
  std::sort(entries.begin(), entries.end(),
            [](const CorpusEntry& a, const CorpusEntry& b) { return a.id < b.id; });
  return entries;
}

CorpusReport run_corpus(const std::vector<CorpusEntry>& entries, const std::string& filter,
                        const ExecOptions& options) {
  std::vector<const CorpusEntry*> selected;
  for (const CorpusEntry& e : entries)
    if (filter.empty() || e.id == filter) selected.push_back(&e);
  if (selected.empty()) {
    if (filter.empty()) throw Error("corpus is empty");
    throw Error("no corpus entry with id '" + filter + "'");
  }
  CorpusReport report;
  for (const CorpusEntry* e : selected) {
    CorpusRun run;
    run.entry = *e;
    run.report = execute(e->script, options);
    if (!run.report.ok) report.ok = false;
    report.runs.push_back(std::move(run));
  }
  return report;
}

nlohmann::json to_json(const CorpusReport& report) {
  nlohmann::json out;
  out["ok"] = report.ok;
  nlohmann::json entries = nlohmann::json::array();
  for (const CorpusRun& run : report.runs) {
    nlohmann::json item = to_json(run.report, run.entry.script);
    item["id"] = run.entry.id;
    item["title"] = run.entry.title;
    item["notes"] = run.entry.notes;
    item["engine"] = run.entry.engine;
    item["path"] = run.entry.path;
    entries.push_back(std::move(item));
  }
  out["entries"] = std::move(entries);
  return out;
}

std::string to_text(const CorpusReport& report) {
  std::ostringstream out;
  for (const CorpusRun& run : report.runs) {
    int asserts = 0, passed = 0;
    for (const CommandResult& r : run.report.results) {
      if (!r.is_assert) continue;
      ++asserts;
      if (r.pass.value_or(false)) ++passed;
    }
    bool entry_ok = run.report.ok;
    out << (entry_ok ? "pass" : "FAIL") << "  " << run.entry.id << "  (" << passed << "/"
        << asserts << " asserts";
    if (!run.entry.engine.empty()) out << ", " << run.entry.engine;
    out << ")";
    if (!run.entry.title.empty()) out << "  " << run.entry.title;
    out << "\n";
    if (!entry_ok)
      for (const CommandResult& r : run.report.results)
        if ((r.pass && !*r.pass) || r.error) out << "    " << r.text << "\n";
  }
  out << (report.ok ? "ok" : "FAILED") << "\n";
  return out.str();
}

}  // namespace idealis
