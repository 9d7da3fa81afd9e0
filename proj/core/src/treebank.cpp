#include "linarr/treebank.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <type_traits>

#include "linarr/rng.hpp"
#include "linarr/version.hpp"

namespace linarr {

const char* to_string(DiagnosticCode c) {
  switch (c) {
    case DiagnosticCode::MalformedRow:
      return "malformed row";
    case DiagnosticCode::MultipleRoots:
      return "multiple roots";
    case DiagnosticCode::NoRoot:
      return "no root";
    case DiagnosticCode::CycleInHeads:
      return "cycle in heads";
  }
  return "unknown";
}

namespace {

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> fields;
  size_t start = 0;
  for (;;) {
    const size_t tab = line.find('\t', start);
    if (tab == std::string::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
}

bool parse_int(const std::string& s, int& out) {
  if (s.empty()) return false;
  const char* begin = s.data();
  const char* end = begin + s.size();
  const auto [ptr, ec] = std::from_chars(begin, end, out);
  return ec == std::errc() && ptr == end;
}

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

struct PendingSentence {
  std::string sent_id;
  std::vector<std::string> tokens;
  std::vector<int> heads;
  std::vector<std::string> deprels;
  int line_begin = 0;
  int line_end = 0;
  bool bad = false;  // a diagnostic was already emitted
};

// Union-find cycle check over the head assignments (ignoring the root link).
bool heads_form_tree(const std::vector<int>& heads) {
  const int n = static_cast<int>(heads.size());
  std::vector<int> parent(static_cast<size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) parent[static_cast<size_t>(i)] = i;
  const auto find = [&](int x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  };
  for (int i = 1; i <= n; ++i) {
    const int h = heads[static_cast<size_t>(i) - 1];
    if (h == 0) continue;
    const int a = find(i);
    const int b = find(h);
    if (a == b) return false;
    parent[static_cast<size_t>(a)] = b;
  }
  return true;
}

}  // namespace

ConlluParseResult parse_conllu(std::istream& in, const std::string& file_name) {
  ConlluParseResult result;
  PendingSentence current;
  int line_no = 0;
  int sentence_index = 0;

  const auto flush = [&]() {
    if (current.tokens.empty() && current.sent_id.empty()) {
      current = PendingSentence{};
      return;
    }
    ++sentence_index;
    std::string id = current.sent_id.empty()
                         ? file_name + ":" + std::to_string(sentence_index)
                         : current.sent_id;
    if (!current.bad && !current.tokens.empty()) {
      const int roots = static_cast<int>(
          std::count(current.heads.begin(), current.heads.end(), 0));
      const int n = static_cast<int>(current.tokens.size());
      bool head_range_ok = true;
      for (int h : current.heads) {
        if (h < 0 || h > n) head_range_ok = false;
      }
      if (!head_range_ok) {
        result.diagnostics.push_back(
            {DiagnosticCode::MalformedRow, id, file_name, current.line_end,
             "head index out of range"});
      } else if (roots == 0) {
        result.diagnostics.push_back({DiagnosticCode::NoRoot, id, file_name,
                                      current.line_end,
                                      "no token with head 0"});
      } else if (roots > 1) {
        result.diagnostics.push_back(
            {DiagnosticCode::MultipleRoots, id, file_name, current.line_end,
             std::to_string(roots) + " tokens with head 0"});
      } else if (!heads_form_tree(current.heads)) {
        result.diagnostics.push_back({DiagnosticCode::CycleInHeads, id,
                                      file_name, current.line_end,
                                      "head assignments contain a cycle"});
      } else {
        SentenceRecord record;
        record.id = std::move(id);
        record.tokens = std::move(current.tokens);
        record.heads = std::move(current.heads);
        record.deprels = std::move(current.deprels);
        record.file = file_name;
        record.line_begin = current.line_begin;
        record.line_end = current.line_end;
        result.sentences.push_back(std::move(record));
      }
    }
    current = PendingSentence{};
  };

  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) {
      flush();
      continue;
    }
    if (line[0] == '#') {
      const size_t eq = line.find('=');
      if (eq != std::string::npos &&
          trim(line.substr(1, eq - 1)) == "sent_id") {
        current.sent_id = trim(line.substr(eq + 1));
        if (current.line_begin == 0) current.line_begin = line_no;
      }
      continue;
    }
    if (current.bad) continue;  // skip the rest of a rejected sentence
    if (current.line_begin == 0) current.line_begin = line_no;
    current.line_end = line_no;

    const auto fields = split_tabs(line);
    const std::string& id_field = fields[0];
    // Multiword-token ranges ("3-4") and empty nodes ("5.1") carry no
    // word-level structure here.
    if (id_field.find('-') != std::string::npos ||
        id_field.find('.') != std::string::npos) {
      continue;
    }
    const auto reject = [&](const std::string& message) {
      const std::string id = current.sent_id.empty()
                                 ? file_name + ":" + std::to_string(sentence_index + 1)
                                 : current.sent_id;
      result.diagnostics.push_back(
          {DiagnosticCode::MalformedRow, id, file_name, line_no, message});
      current.bad = true;
    };
    if (fields.size() != 10) {
      reject("expected 10 tab-separated columns, got " +
             std::to_string(fields.size()));
      continue;
    }
    int token_id = 0;
    if (!parse_int(id_field, token_id)) {
      reject("unparseable token id '" + id_field + "'");
      continue;
    }
    if (token_id != static_cast<int>(current.tokens.size()) + 1) {
      reject("token ids must be consecutive from 1, got " + id_field);
      continue;
    }
    int head = 0;
    if (!parse_int(fields[6], head)) {
      reject("unparseable head '" + fields[6] + "'");
      continue;
    }
    current.tokens.push_back(fields[1]);
    current.heads.push_back(head);
    current.deprels.push_back(fields[7]);
  }
  flush();
  return result;
}

SentenceTree to_tree(const SentenceRecord& record) {
  const int n = static_cast<int>(record.tokens.size());
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) {
    const int head = record.heads[static_cast<size_t>(i) - 1];
    if (head != 0) edges.emplace_back(i, head);
  }
  return SentenceTree{record.id, Tree::build(n, edges),
                      LinearArrangement::identity(n)};
}

SentenceRecord drop_punct(const SentenceRecord& record) {
  const int n = static_cast<int>(record.tokens.size());
  std::vector<char> punct(static_cast<size_t>(n) + 1, 0);
  for (int i = 1; i <= n; ++i) {
    if (record.deprels[static_cast<size_t>(i) - 1] == "punct") {
      punct[static_cast<size_t>(i)] = 1;
    }
  }
  // Nearest kept ancestor; head chains through punctuation collapse.
  const auto resolve = [&](int head) {
    while (head != 0 && punct[static_cast<size_t>(head)]) {
      head = record.heads[static_cast<size_t>(head) - 1];
    }
    return head;
  };
  std::vector<int> new_index(static_cast<size_t>(n) + 1, 0);
  SentenceRecord out;
  out.id = record.id;
  out.file = record.file;
  out.line_begin = record.line_begin;
  out.line_end = record.line_end;
  for (int i = 1; i <= n; ++i) {
    if (punct[static_cast<size_t>(i)]) continue;
    new_index[static_cast<size_t>(i)] = static_cast<int>(out.tokens.size()) + 1;
    out.tokens.push_back(record.tokens[static_cast<size_t>(i) - 1]);
    out.deprels.push_back(record.deprels[static_cast<size_t>(i) - 1]);
  }
  for (int i = 1; i <= n; ++i) {
    if (punct[static_cast<size_t>(i)]) continue;
    const int head = resolve(record.heads[static_cast<size_t>(i) - 1]);
    out.heads.push_back(head == 0 ? 0 : new_index[static_cast<size_t>(head)]);
  }
  return out;
}

EdgeListResult parse_edge_list(std::istream& in) {
  std::string line;
  int line_no = 0;
  int n = -1;
  std::vector<std::pair<int, int>> edges;
  std::vector<Vertex> order;
  bool order_given = false;

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::string content = trim(line);
    if (content.empty() || content[0] == '#') continue;
    if (n < 0) {
      if (content.rfind("n=", 0) != 0 || !parse_int(content.substr(2), n) ||
          n < 1) {
        throw Error("edge list line " + std::to_string(line_no) +
                    ": expected header 'n=<count>'");
      }
      continue;
    }
    if (content.rfind("order:", 0) == 0) {
      if (order_given) {
        throw Error("edge list line " + std::to_string(line_no) +
                    ": duplicate order line");
      }
      std::istringstream fields(content.substr(6));
      int v = 0;
      while (fields >> v) order.push_back(v);
      if (static_cast<int>(order.size()) != n) {
        throw Error("edge list line " + std::to_string(line_no) + ": order lists " +
                    std::to_string(order.size()) + " vertices, expected " +
                    std::to_string(n));
      }
      order_given = true;
      continue;
    }
    std::istringstream fields(content);
    int u = 0, v = 0;
    std::string extra;
    if (!(fields >> u >> v) || (fields >> extra)) {
      throw Error("edge list line " + std::to_string(line_no) +
                  ": expected 'u v'");
    }
    edges.emplace_back(u, v);
  }
  if (n < 0) throw Error("edge list: missing 'n=<count>' header");

  EdgeListResult result{Tree::build(n, edges),
                        order_given ? LinearArrangement::from_order(order)
                                    : LinearArrangement::identity(n),
                        order_given};
  return result;
}

EdgeListResult parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return parse_edge_list(in);
}

namespace {

void write_meta(std::ostream& out, const OutputMeta& meta) {
  out << "# linarr " << kVersion << "\n";
  if (!meta.command.empty()) out << "# command: " << meta.command << "\n";
  out << "# rng: " << kRngName << "\n";
  out << "# seed: " << meta.seed << "\n";
  out << "# alpha: " << format_full(meta.alpha) << "\n";
  if (meta.samples > 0) out << "# samples: " << meta.samples << "\n";
  for (const std::string& note : meta.notes) out << "# " << note << "\n";
}

template <typename T>
std::string cell(const std::optional<T>& value) {
  if (!value.has_value()) return "";
  if constexpr (std::is_same_v<T, Rational>) {
    return format_sig2(*value);
  } else if constexpr (std::is_same_v<T, double>) {
    return format_sig2(*value);
  } else {
    return std::to_string(*value);
  }
}

}  // namespace

long long write_csv(std::ostream& out, std::span<const SentenceAnalysis> rows,
                    const OutputMeta& meta) {
  write_meta(out, meta);
  out << "sentence_id,n,mean_k2,C,D,C_max,D_min,D_max,E0_C,eps0,E1_C,eps1,"
         "E_C_given_D,eps_cond,pL_C,pR_C,pL_dev,pR_dev,R,method,seed,"
         "E_C_given_D_se\n";
  long long written = 0;
  for (const SentenceAnalysis& sa : rows) {
    out << sa.id << ',' << sa.n << ',' << format_sig2(sa.mean_k2) << ',' << sa.c
        << ',' << sa.d << ',' << sa.c_max << ',' << cell(sa.d_min) << ','
        << cell(sa.d_max) << ',' << format_sig2(sa.e0_c) << ','
        << format_sig2(sa.eps0) << ',' << format_sig2(sa.e1_c) << ','
        << format_sig2(sa.eps1) << ',' << cell(sa.e_c_given_d) << ','
        << cell(sa.eps_cond) << ','
        << (sa.p_c ? format_sig2(sa.p_c->left_p) : "") << ','
        << (sa.p_c ? format_sig2(sa.p_c->right_p) : "") << ','
        << (sa.p_dev ? format_sig2(sa.p_dev->left_p) : "") << ','
        << (sa.p_dev ? format_sig2(sa.p_dev->right_p) : "") << ',' << sa.r
        << ',' << to_string(sa.method) << ',' << sa.seed_used << ','
        << cell(sa.e_c_given_d_se) << '\n';
    ++written;
  }
  return written;
}

void write_curve_csv(std::ostream& out, const CrossingsVsLengthCurve& curve,
                     const OutputMeta& meta) {
  write_meta(out, meta);
  out << "# E0_C: " << format_full(curve.e0_c) << "\n";
  out << "# E0_D: " << format_full(curve.e0_d) << "\n";
  out << "D,R,mean_C,mean_E1C\n";
  for (const CurvePoint& p : curve.points) {
    out << p.d << ',' << p.r << ',' << format_full(p.mean_c) << ','
        << format_full(p.mean_e1c) << '\n';
  }
}

}  // namespace linarr
