#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "linarr/analysis.hpp"
#include "linarr/arrangement.hpp"
#include "linarr/tree.hpp"

namespace linarr {

// One sentence as read from a treebank: surface forms in attested order and
// a head assignment per token (0 marks the root).
struct SentenceRecord {
  std::string id;
  std::vector<std::string> tokens;
  std::vector<int> heads;
  std::vector<std::string> deprels;
  std::string file;
  int line_begin = 0;
  int line_end = 0;
};

enum class DiagnosticCode { MalformedRow, MultipleRoots, NoRoot, CycleInHeads };

const char* to_string(DiagnosticCode c);

struct Diagnostic {
  DiagnosticCode code;
  std::string sentence_id;
  std::string file;
  int line = 0;
  std::string message;
};

struct ConlluParseResult {
  std::vector<SentenceRecord> sentences;
  std::vector<Diagnostic> diagnostics;  // one per rejected sentence
};

// Reads the CoNLL-U subset: 10 tab-separated columns of which ID and HEAD are
// significant (DEPREL is kept for punctuation filtering). Multiword-token
// ranges ("3-4") and empty nodes ("5.1") are skipped. Rejected sentences
// produce exactly one diagnostic and parsing continues.
ConlluParseResult parse_conllu(std::istream& in, const std::string& file_name);

struct SentenceTree {
  std::string id;
  Tree tree;
  LinearArrangement attested;  // token i at position i
};

// Word-level tree of a validated record; the head-0 attachment is structural
// metadata, not an edge, so the tree has n-1 edges.
SentenceTree to_tree(const SentenceRecord& record);

// Removes tokens whose deprel is "punct", reattaching dependents to the
// nearest kept ancestor and re-indexing. The result still needs validation.
SentenceRecord drop_punct(const SentenceRecord& record);

// Edge-list format: optional '#' comments, a "n=<int>" header, one "u v"
// line per edge, and an optional "order: v1 v2 ... vn" line giving the
// attested arrangement (identity when omitted).
struct EdgeListResult {
  Tree tree;
  LinearArrangement attested;
  bool order_given = false;
};

EdgeListResult parse_edge_list(std::istream& in);
EdgeListResult parse_edge_list(const std::string& text);

struct OutputMeta {
  std::string command;
  std::uint64_t seed = 0;
  double alpha = 0.05;
  long long samples = 0;
  std::vector<std::string> notes;  // extra '#' header lines
};

// One row per sentence, deterministic column order, '#'-prefixed metadata
// header. Table cells use the two-significant-digit display form; returns
// the number of rows written.
long long write_csv(std::ostream& out, std::span<const SentenceAnalysis> rows,
                    const OutputMeta& meta);

// Per-D ensemble profile as CSV (full precision; reference levels go into
// the metadata header).
void write_curve_csv(std::ostream& out, const CrossingsVsLengthCurve& curve,
                     const OutputMeta& meta);

}  // namespace linarr
