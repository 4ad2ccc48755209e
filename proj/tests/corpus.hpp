#pragma once

#include <fstream>
#include <string>
#include <vector>

// Round-trip corpus: lines "<context>: <text>", '#' comments.
struct CorpusEntry {
  std::string context;  // "fock 2", "fock image 1", "poly 2", "image 1", "laurent"
  std::string text;
};

inline std::vector<CorpusEntry> load_corpus(const std::string& path) {
  std::ifstream in(path);
  std::vector<CorpusEntry> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) continue;
    out.push_back({line.substr(0, colon), line.substr(colon + 2)});
  }
  return out;
}
