#pragma once

/// Knot-table ingestion and batch triviality scans.
///
/// Tables are CSV files with header `name,pd`. The pd column holds a
/// diagram in the PD grammar of diagram.hpp and is double-quoted, since
/// the grammar itself contains commas:
///
///   name,pd
///   T(2/3),"X[1,4,2,5];X[3,6,4,1];X[5,2,6,3]"
///
/// Faulty rows never abort a load or a scan; they are collected with a
/// reason string so partial results stay usable.

#include <algorithm>
#include <cstddef>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "knotmod/bracket.hpp"
#include "knotmod/common.hpp"
#include "knotmod/diagram.hpp"
#include "knotmod/laurent.hpp"
#include "knotmod/modular.hpp"

namespace knotmod {

struct TableEntry {
  std::string name;
  Diagram pd;
  std::size_t crossing_count = 0;
};

struct SkippedRow {
  std::string name;  // row name, or a line marker when the name is unusable
  std::string reason;
};

struct TableLoad {
  std::vector<TableEntry> entries;
  std::vector<SkippedRow> skipped;
};

struct ScanHit {
  std::string name;
  LaurentPoly residue;  // reduction of the entry's Jones polynomial
};

struct ScanReport {
  long long modulus = 0;
  std::vector<ScanHit> hits;
  std::size_t scanned = 0;  // entries whose Jones polynomial was tested
  std::vector<SkippedRow> skipped;
};

namespace detail {

/// Splits one data row into name and pd text. Returns false with a reason
/// when the row does not fit the grammar.
inline bool split_row(const std::string& line, std::string& name,
                      std::string& pd, std::string& reason) {
  const std::size_t comma = line.find(',');
  if (comma == std::string::npos) {
    reason = "missing pd column";
    return false;
  }
  name = line.substr(0, comma);
  if (name.empty()) {
    reason = "missing name";
    return false;
  }
  std::string rest = line.substr(comma + 1);
  if (rest.size() >= 2 && rest.front() == '"' && rest.back() == '"') {
    rest = rest.substr(1, rest.size() - 2);
  } else if (rest.find(',') != std::string::npos) {
    reason = "pd column must be quoted";
    return false;
  }
  if (rest.empty()) {
    reason = "empty pd column";
    return false;
  }
  pd = rest;
  return true;
}

}  // namespace detail

/// Reads a knot table. Unreadable files and a bad header are errors; bad
/// rows land in `skipped` and parsing continues.
inline TableLoad load_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read table file: " + path);
  std::string line;
  if (!std::getline(in, line)) throw InputError("malformed table header");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "name,pd") throw InputError("malformed table header");

  TableLoad out;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::string name, pd, reason;
    if (!detail::split_row(line, name, pd, reason)) {
      out.skipped.push_back({"line " + std::to_string(lineno), reason});
      continue;
    }
    try {
      Diagram d = parse_pd(pd);
      const std::size_t crossings = d.crossings().size();
      out.entries.push_back({name, std::move(d), crossings});
    } catch (const InputError& e) {
      out.skipped.push_back({name, e.what()});
    }
  }
  return out;
}

/// Tests every entry within the crossing cap for n-triviality. Entries are
/// processed in name order, so reports are reproducible regardless of table
/// order. Per-entry failures are skipped, never fatal.
inline ScanReport scan_table(const std::vector<TableEntry>& entries,
                             long long n, std::size_t max_crossings,
                             const BracketOptions& opts = {}) {
  if (n < 2) throw InputError("triviality modulus must be at least 2");
  std::vector<const TableEntry*> order;
  order.reserve(entries.size());
  for (const auto& e : entries) order.push_back(&e);
  std::sort(order.begin(), order.end(),
            [](const TableEntry* a, const TableEntry* b) {
              return a->name < b->name;
            });

  ScanReport report;
  report.modulus = n;
  for (const TableEntry* e : order) {
    if (e->crossing_count > max_crossings) {
      report.skipped.push_back({e->name, "crossing cap"});
      continue;
    }
    try {
      const LaurentPoly v = jones(e->pd, opts);
      const TrivialityVerdict verdict = is_n_trivial(v, n);
      ++report.scanned;
      if (verdict.is_trivial) report.hits.push_back({e->name, verdict.residue});
    } catch (const InputError& err) {
      report.skipped.push_back({e->name, err.what()});
    }
  }
  return report;
}

/// Batch form of trivial_moduli: per-entry modulus lists, in name order.
/// Entries whose modulus list is empty are omitted, as are entries that
/// fail to evaluate or sit over the crossing cap.
inline std::vector<std::pair<std::string, TrivialModuli>> spectrum(
    const std::vector<TableEntry>& entries, std::size_t max_crossings,
    const BracketOptions& opts = {}) {
  std::vector<const TableEntry*> order;
  order.reserve(entries.size());
  for (const auto& e : entries) order.push_back(&e);
  std::sort(order.begin(), order.end(),
            [](const TableEntry* a, const TableEntry* b) {
              return a->name < b->name;
            });

  std::vector<std::pair<std::string, TrivialModuli>> out;
  for (const TableEntry* e : order) {
    if (e->crossing_count > max_crossings) continue;
    LaurentPoly v;
    try {
      v = jones(e->pd, opts);
    } catch (const InputError&) {
      continue;
    }
    TrivialModuli tm = trivial_moduli(v);
    if (tm.all || !tm.moduli.empty()) out.emplace_back(e->name, std::move(tm));
  }
  return out;
}

}  // namespace knotmod
