#pragma once

#include <string>
#include <vector>

#include "idealis/script.hpp"

namespace idealis {

// One catalogued worked example: an .idl script plus the header metadata
// (`# id: ...` lines) at the top of the file.
struct CorpusEntry {
  std::string id;
  std::string title;
  std::string notes;
  std::string engine;  // polynomial | semigroup-q | semigroup-z
  std::string path;
  SessionScript script;
};

// Loads every *.idl under dir, sorted by id.  Entries must carry an id and at
// least one assert; duplicate ids are rejected.
std::vector<CorpusEntry> load_corpus(const std::string& dir);

struct CorpusRun {
  CorpusEntry entry;
  RunReport report;
};

struct CorpusReport {
  std::vector<CorpusRun> runs;
  bool ok = true;
};

// filter: empty for all entries, otherwise an exact id (unknown ids throw)
CorpusReport run_corpus(const std::vector<CorpusEntry>& entries, const std::string& filter,
                        const ExecOptions& options);

nlohmann::json to_json(const CorpusReport& report);
std::string to_text(const CorpusReport& report);

}  // namespace idealis
